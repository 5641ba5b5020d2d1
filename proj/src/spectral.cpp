#include "slowlight/spectral.hpp"

#include <cmath>

#include "slowlight/errors.hpp"
#include "slowlight/special_functions.hpp"

namespace slowlight {

namespace {

constexpr double kIntegerGammaTol = 1e-9;
constexpr double kPoleTol = 1e-14;

bool near_integer(Complex z) {
  return std::abs(z.imag()) < kIntegerGammaTol &&
         std::abs(z.real() - std::round(z.real())) < kIntegerGammaTol;
}

}  // namespace

Complex branched_root(Complex lambda, double omega0) {
  if (lambda.imag() == 0.0) throw DomainError("branched_root: lambda must not be real");
  Complex s = std::sqrt(lambda * lambda + omega0 * omega0);
  if (s.imag() * lambda.imag() < 0.0) s = -s;
  if (!(s.imag() * lambda.imag() > 0.0))
    throw DegenerateParameterError(
        "branched_root: lambda^2 + omega0^2 is non-negative real, branch rule undefined");
  return s;
}

SpectralData::SpectralData(const ValidatedConfig& config) : config_(config) {
  const double omega0 = config.schedule.omega0;
  const double alpha = config.schedule.alpha;
  const Complex lambda = config.lambda;

  s_ = branched_root(lambda, omega0);
  w0_ = omega0 / (lambda + s_);
  gamma_ = (alpha + Complex(0, 1) * lambda) / (2.0 * alpha);
  x0_ = -omega0 / (2.0 * alpha);

  if (near_integer(gamma_))
    throw DegenerateParameterError(
        "Bessel index gamma = (alpha + i lambda)/(2 alpha) is an integer; "
        "J_gamma and J_-gamma are dependent and the decay-region data degenerate");

  const Complex x0c(x0_, 0.0);
  const Complex jg = bessel_j(gamma_, x0c);
  const Complex jmg = bessel_j(-gamma_, x0c);
  const Complex jgm1 = bessel_j(gamma_ - 1.0, x0c);
  const Complex j1mg = bessel_j(1.0 - gamma_, x0c);

  const Complex c1_den = j1mg + Complex(0, 1) * w0_ * jmg;
  if (std::abs(c1_den) < kPoleTol * (std::abs(j1mg) + std::abs(w0_ * jmg) + 1.0))
    throw DegenerateParameterError("vanishing denominator in the decay-region matching constant");
  c1_ = (-Complex(0, 1) * w0_ * jg + jgm1) / c1_den;

  n0_ = c1_ * jmg + jg;
  if (std::abs(n0_) < kPoleTol * (std::abs(c1_ * jmg) + std::abs(jg) + 1.0))
    throw DegenerateParameterError("vanishing spectral denominator at the decay-region start");

  c3_ = (omega0 * omega0 + 2.0 * lambda * (lambda - s_)) / (omega0 * omega0);
  if (std::abs(c3_ + 1.0) < kPoleTol * (std::abs(c3_) + 1.0))
    throw DegenerateParameterError("revival-region matching constant equals -1");

  // Stored-phase constant: the tau -> inf limit of the decay-region z, in
  // closed form. Same principal branch as the series prefactor of bessel_j,
  // otherwise the limit would acquire a spurious phase.
  const Complex quarter(-omega0 / (4.0 * alpha), 0.0);
  z2_ = log_principal(c1_ * complex_pow_principal(quarter, -gamma_) *
                      gamma_reciprocal(1.0 - gamma_) / n0_);

  // Sub-steps small enough that the tracked logs rotate by well under pi
  // between samples, making the unwrapped branch unambiguous.
  d1_unwrap_step_ = 0.5 / (1.0 + alpha + std::abs(lambda));
  d3_unwrap_step_ = 0.5 / (1.0 + std::abs(lambda) + std::abs(s_));
}

Complex SpectralData::bessel_ratio_numerator(Complex x) const {
  return c1_ * bessel_j(1.0 - gamma_, x) - bessel_j(gamma_ - 1.0, x);
}

Complex SpectralData::bessel_ratio_denominator(Complex x) const {
  return c1_ * bessel_j(-gamma_, x) + bessel_j(gamma_, x);
}

Complex SpectralData::d3_bracket(double tau) const {
  const Complex lambda = config_.lambda;
  const Complex u(0.5 * (tau - config_.schedule.t_revive), 0.0);
  return (c3_ * std::exp(-Complex(0, 1) * (lambda + s_) * u) +
          std::exp(-Complex(0, 1) * (lambda - s_) * u)) /
         (c3_ + 1.0);
}

Complex SpectralData::w_in_region(double tau, Region region) const {
  switch (region) {
    case Region::D0:
      return w0_;
    case Region::D1: {
      const Complex x(-background_field(tau, config_.schedule) / (2.0 * config_.schedule.alpha),
                      0.0);
      const Complex den = bessel_ratio_denominator(x);
      if (std::abs(den) < kPoleTol) throw PoleError("pole of spectral w", tau);
      return Complex(0, 1) * bessel_ratio_numerator(x) / den;
    }
    case Region::D2:
      return {0.0, 0.0};
    case Region::D3: {
      const Complex t = std::tan(0.5 * s_ * (tau - config_.schedule.t_revive));
      const Complex den = config_.lambda * t - Complex(0, 1) * s_;
      if (std::abs(den) < kPoleTol * (std::abs(config_.lambda * t) + std::abs(s_)))
        throw PoleError("pole of spectral w", tau);
      return config_.schedule.omega0 * t / den;
    }
  }
  return {};
}

Complex SpectralData::continuous_log_d1(double tau) const {
  // log of N(x(t))/N(x(0)) along t in [0, tau], unwrapped by stepping.
  const int n = std::max(1, static_cast<int>(std::ceil(tau / d1_unwrap_step_)));
  Complex log_sum(0.0, 0.0);
  Complex prev = n0_;
  for (int k = 1; k <= n; ++k) {
    const double t = tau * static_cast<double>(k) / n;
    const Complex x(-background_field(t, config_.schedule) / (2.0 * config_.schedule.alpha), 0.0);
    const Complex cur = bessel_ratio_denominator(x);
    if (cur == Complex(0.0, 0.0))
      throw DegenerateParameterError("logarithm of a vanishing spectral denominator");
    log_sum += log_principal(cur / prev);
    prev = cur;
  }
  return log_sum;
}

Complex SpectralData::continuous_log_d3(double tau) const {
  const double t_revive = config_.schedule.t_revive;
  const int n =
      std::max(1, static_cast<int>(std::ceil((tau - t_revive) / d3_unwrap_step_)));
  Complex log_sum(0.0, 0.0);
  Complex prev(1.0, 0.0); // bracket at tau = t_revive
  for (int k = 1; k <= n; ++k) {
    const double t = t_revive + (tau - t_revive) * static_cast<double>(k) / n;
    const Complex cur = d3_bracket(t);
    if (cur == Complex(0.0, 0.0))
      throw DegenerateParameterError("logarithm of a vanishing revival bracket");
    log_sum += log_principal(cur / prev);
    prev = cur;
  }
  return log_sum;
}

Complex SpectralData::z_in_region(double tau, Region region) const {
  switch (region) {
    case Region::D0:
      return Complex(0, 0.5) * config_.schedule.omega0 * w0_ * tau;
    case Region::D1:
      return -config_.schedule.alpha * gamma_ * tau + continuous_log_d1(tau);
    case Region::D2:
      return z2_;
    case Region::D3:
      return continuous_log_d3(tau) + z2_;
  }
  return {};
}

Complex SpectralData::w(double tau) const {
  return w_in_region(tau, region_of(tau, config_.schedule));
}

Complex SpectralData::z(double tau) const {
  return z_in_region(tau, region_of(tau, config_.schedule));
}

SpectralPoint SpectralData::at(double tau) const {
  const Region region = region_of(tau, config_.schedule);
  return {w_in_region(tau, region), z_in_region(tau, region), region, tau};
}

Complex SpectralData::constant(Region region) const {
  switch (region) {
    case Region::D0: return {0.0, 0.0};
    case Region::D1: return c1_;
    case Region::D2: return c1_;
    case Region::D3: return c3_;
  }
  return {};
}

}  // namespace slowlight
