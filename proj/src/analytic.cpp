#include "slowlight/analytic.hpp"

#include <cmath>

#include "slowlight/errors.hpp"

namespace slowlight {

namespace {

// Overflow-safe sech.
double sech(double x) {
  const double e = std::exp(-std::abs(x));
  return 2.0 * e / (1.0 + e * e);
}

// Overflow-safe e^x sech(x) = 2 / (1 + e^(-2x)).
double exp_sech(double x) {
  if (x > 350.0) return 2.0;
  if (x < -350.0) return 0.0;
  return 2.0 / (1.0 + std::exp(-2.0 * x));
}

}  // namespace

AnalyticSolution::AnalyticSolution(const ValidatedConfig& config)
    : config_(config), spectral_(config) {
  const Complex inv = 1.0 / (config.lambda - config.medium.delta);
  kappa_ = 0.5 * config.medium.nu0 * inv.imag();
  theta_slope_ = 0.5 * config.medium.nu0 * inv.real();
  abs_lambda_delta_ = std::abs(config.lambda - config.medium.delta);
}

Phases AnalyticSolution::phases(double zeta, const SpectralPoint& sp) const {
  const double phi = config_.phi0 + kappa_ * zeta + sp.z.real() + 0.5 * std::log1p(std::norm(sp.w));
  const double theta = config_.theta0 - theta_slope_ * zeta + sp.z.imag();
  return {phi, theta};
}

FieldState AnalyticSolution::dressed_fields(double zeta, const SpectralPoint& sp,
                                            double omega) const {
  const auto [phi, theta] = phases(zeta, sp);
  const Complex lambda = config_.lambda;
  const double norm_w = std::norm(sp.w);
  const Complex a = (std::conj(lambda) - lambda) * sp.w * std::exp(Complex(0.0, theta)) *
                    sech(phi) / std::sqrt(1.0 + norm_w);
  const Complex b = (lambda - std::conj(lambda)) * sp.w * exp_sech(phi) / (1.0 + norm_w) - omega;
  return {a, b};
}

FieldState AnalyticSolution::fields(double zeta, const SpectralPoint& sp) const {
  return dressed_fields(zeta, sp, background_field(sp.tau, config_.schedule));
}

FieldState AnalyticSolution::fields_in_region(double zeta, double tau, Region region) const {
  const SpectralPoint sp{spectral_.w_in_region(tau, region), spectral_.z_in_region(tau, region),
                         region, tau};
  double omega = 0.0;
  switch (region) {
    case Region::D0:
    case Region::D3:
      omega = config_.schedule.omega0;
      break;
    case Region::D1:
      omega = config_.schedule.omega0 * std::exp(-config_.schedule.alpha * tau);
      break;
    case Region::D2:
      omega = 0.0;
      break;
  }
  return dressed_fields(zeta, sp, omega);
}

Eigen::Vector3cd AnalyticSolution::state(double zeta, const SpectralPoint& sp) const {
  const auto [phi, theta] = phases(zeta, sp);
  const Complex lambda = config_.lambda;
  const double delta = config_.medium.delta;
  const double norm_w = std::norm(sp.w);
  const double sech_phi = sech(phi);
  const Complex phase = std::exp(Complex(0.0, theta));

  Eigen::Vector3cd psi;
  psi(0) = (lambda.real() - delta - Complex(0.0, 1.0) * lambda.imag() * std::tanh(phi)) /
           abs_lambda_delta_;
  // c2 in the w-cancelled form, exact where w vanishes
  psi(1) = (std::conj(lambda) - lambda) * phase * sech_phi /
           (2.0 * abs_lambda_delta_ * std::sqrt(1.0 + norm_w));
  psi(2) = -(std::conj(lambda) - lambda) * sp.w * phase * sech_phi /
           (2.0 * abs_lambda_delta_ * std::sqrt(1.0 + norm_w));
  return psi;
}

Eigen::Matrix3cd AnalyticSolution::density(double zeta, double tau) const {
  const Eigen::Vector3cd psi = state(zeta, tau);
  return psi * psi.adjoint();
}

GridSolution AnalyticSolution::evaluate(const GridSpec& spec) const {
  if (axis_count(spec.tau_min, spec.tau_max, spec.tau_step, "tau") *
          axis_count(spec.zeta_min, spec.zeta_max, spec.zeta_step, "zeta") >
      kMaxGridNodes)
    throw GridError("requested grid exceeds the node cap");
  const Eigen::ArrayXd tau_axis = make_axis(spec.tau_min, spec.tau_max, spec.tau_step, "tau");
  const Eigen::ArrayXd zeta_axis =
      make_axis(spec.zeta_min, spec.zeta_max, spec.zeta_step, "zeta");

  GridSolution out;
  out.allocate(tau_axis, zeta_axis);
  out.provenance = Provenance::Analytic;

  for (Eigen::Index i = 0; i < tau_axis.size(); ++i) {
    const SpectralPoint sp = spectral_.at(tau_axis[i]);
    for (Eigen::Index k = 0; k < zeta_axis.size(); ++k) {
      const double zeta = zeta_axis[k];
      const FieldState f = fields(zeta, sp);
      const Eigen::Vector3cd psi = state(zeta, sp);
      out.omega_a(i, k) = f.omega_a;
      out.omega_b(i, k) = f.omega_b;
      out.rho11(i, k) = std::norm(psi(0));
      out.rho22(i, k) = std::norm(psi(1));
      out.rho33(i, k) = std::norm(psi(2));
      out.rho21(i, k) = psi(1) * std::conj(psi(0));
      out.rho31(i, k) = psi(2) * std::conj(psi(0));
      out.rho32(i, k) = psi(2) * std::conj(psi(1));
    }
  }
  return out;
}

double AnalyticSolution::soliton_center(const SpectralPoint& sp) const {
  return -(config_.phi0 + sp.z.real() + 0.5 * std::log1p(std::norm(sp.w))) / kappa_;
}

double AnalyticSolution::soliton_center(double tau) const {
  return soliton_center(spectral_.at(tau));
}

double AnalyticSolution::levelset_slope() const {
  const double dphi_dtau =
      std::real(Complex(0.0, 0.5) * config_.schedule.omega0 * spectral_.w0());
  return -dphi_dtau / kappa_;
}

}  // namespace slowlight
