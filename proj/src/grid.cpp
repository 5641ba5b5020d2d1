#include "slowlight/grid.hpp"

#include <cmath>

#include "slowlight/errors.hpp"
#include "slowlight/integrator.hpp"

namespace slowlight {

Eigen::Index axis_count(double min, double max, double step, const char* name) {
  if (!(step > 0.0)) throw GridError(std::string(name) + " step must be positive");
  if (!(max >= min)) throw GridError(std::string(name) + " range is empty");
  const double count = (max - min) / step;
  const double rounded = std::round(count);
  return std::abs(count - rounded) < 1e-9 * std::max(1.0, count)
             ? static_cast<Eigen::Index>(rounded) + 1
             : static_cast<Eigen::Index>(std::floor(count)) + 1;
}

Eigen::ArrayXd make_axis(double min, double max, double step, const char* name) {
  const Eigen::Index n = axis_count(min, max, step, name);
  return min + step * Eigen::ArrayXd::LinSpaced(n, 0.0, static_cast<double>(n - 1));
}

void GridSolution::allocate(const Eigen::ArrayXd& tau_axis, const Eigen::ArrayXd& zeta_axis) {
  tau = tau_axis;
  zeta = zeta_axis;
  const Eigen::Index nt = tau.size(), nz = zeta.size();
  omega_a.resize(nt, nz);
  omega_b.resize(nt, nz);
  rho11.resize(nt, nz);
  rho22.resize(nt, nz);
  rho33.resize(nt, nz);
  rho21.resize(nt, nz);
  rho31.resize(nt, nz);
  rho32.resize(nt, nz);
}

Eigen::Matrix3cd GridSolution::density(Eigen::Index i, Eigen::Index k) const {
  Eigen::Matrix3cd rho;
  rho(0, 0) = rho11(i, k);
  rho(1, 1) = rho22(i, k);
  rho(2, 2) = rho33(i, k);
  rho(1, 0) = rho21(i, k);
  rho(2, 0) = rho31(i, k);
  rho(2, 1) = rho32(i, k);
  rho(0, 1) = std::conj(rho21(i, k));
  rho(0, 2) = std::conj(rho31(i, k));
  rho(1, 2) = std::conj(rho32(i, k));
  return rho;
}

void GridSolution::set_density(Eigen::Index i, Eigen::Index k, const Eigen::Matrix3cd& rho) {
  rho11(i, k) = rho(0, 0).real();
  rho22(i, k) = rho(1, 1).real();
  rho33(i, k) = rho(2, 2).real();
  rho21(i, k) = rho(1, 0);
  rho31(i, k) = rho(2, 0);
  rho32(i, k) = rho(2, 1);
}

namespace {

// true when |tau - boundary| <= buffer nodes for one of the schedule kinks
bool in_kink_buffer(double tau, const ControlSchedule& schedule, double width) {
  const double kinks[3] = {0.0, schedule.t1, schedule.t_revive};
  for (double k : kinks)
    if (std::abs(tau - k) <= width) return true;
  return false;
}

}  // namespace

ResidualNorms residual_norm(const GridSolution& g, const MediumConfig& medium,
                            const ControlSchedule& schedule, double buffer_width) {
  if (g.n_tau() < 3 || g.n_zeta() < 3)
    throw GridError("residual_norm needs at least 3 nodes per axis");
  const double h_tau = g.tau_step();
  const double h_zeta = g.zeta_step();
  if (buffer_width < 0.0) buffer_width = 3.0 * h_tau * (1.0 + 1e-9);

  const Eigen::Matrix3cd D = Eigen::Vector3cd(1.0, 1.0, -1.0).asDiagonal();
  ResidualNorms norms;

  for (Eigen::Index i = 1; i + 1 < g.n_tau(); ++i) {
    if (in_kink_buffer(g.tau[i], schedule, buffer_width)) continue;
    for (Eigen::Index k = 1; k + 1 < g.n_zeta(); ++k) {
      // field equation, scalar reduction of the (3,1) and (3,2) entries
      const Complex ra = (g.omega_a(i, k + 1) - g.omega_a(i, k - 1)) / (2.0 * h_zeta) -
                         Complex(0.0, medium.nu0) * g.rho31(i, k);
      const Complex rb = (g.omega_b(i, k + 1) - g.omega_b(i, k - 1)) / (2.0 * h_zeta) -
                         Complex(0.0, medium.nu0) * g.rho32(i, k);
      norms.field = std::max({norms.field, std::abs(ra), std::abs(rb)});

      // atom equation, full 3x3
      const Eigen::Matrix3cd drho =
          (g.density(i + 1, k) - g.density(i - 1, k)) / (2.0 * h_tau);
      const Eigen::Matrix3cd h_int =
          hamiltonian_from_fields({g.omega_a(i, k), g.omega_b(i, k)});
      const Eigen::Matrix3cd gen = 0.5 * medium.delta * D - h_int;
      const Eigen::Matrix3cd rho = g.density(i, k);
      const Eigen::Matrix3cd res =
          drho - Complex(0.0, 1.0) * (gen * rho - rho * gen);
      norms.atom = std::max(norms.atom, res.cwiseAbs().maxCoeff());
    }
  }
  return norms;
}

ComparisonNorms compare(const GridSolution& a, const GridSolution& b,
                        const ControlSchedule& schedule, double exclude_from,
                        double exclude_to) {
  if (a.n_tau() != b.n_tau() || a.n_zeta() != b.n_zeta() ||
      (a.tau - b.tau).abs().maxCoeff() > 1e-9 || (a.zeta - b.zeta).abs().maxCoeff() > 1e-9)
    throw GridError("compare: grids do not match");

  ComparisonNorms norms;
  norms.excluded_from = exclude_from;
  norms.excluded_to = exclude_to;
  double field_sq_sum = 0.0, pop_sq_sum = 0.0;
  Eigen::Index counted = 0;

  for (Eigen::Index i = 0; i < a.n_tau(); ++i) {
    const double tau = a.tau[i];
    const auto region = static_cast<int>(region_of(tau, schedule));
    const bool excluded = tau >= exclude_from && tau <= exclude_to;
    for (Eigen::Index k = 0; k < a.n_zeta(); ++k) {
      const double da = std::abs(a.omega_a(i, k) - b.omega_a(i, k));
      const double db = std::abs(a.omega_b(i, k) - b.omega_b(i, k));
      const double df = std::max(da, db);
      if (excluded) {
        norms.excluded_field_linf = std::max(norms.excluded_field_linf, df);
        continue;
      }
      const double dp = std::max({std::abs(a.rho11(i, k) - b.rho11(i, k)),
                                  std::abs(a.rho22(i, k) - b.rho22(i, k)),
                                  std::abs(a.rho33(i, k) - b.rho33(i, k))});
      norms.field_linf = std::max(norms.field_linf, df);
      norms.population_linf = std::max(norms.population_linf, dp);
      norms.field_linf_by_region[region] = std::max(norms.field_linf_by_region[region], df);
      field_sq_sum += da * da + db * db;
      pop_sq_sum += dp * dp;
      ++counted;
    }
  }
  if (counted > 0) {
    norms.field_l2 = std::sqrt(field_sq_sum / (2.0 * static_cast<double>(counted)));
    norms.population_l2 = std::sqrt(pop_sq_sum / static_cast<double>(counted));
  }
  return norms;
}

}  // namespace slowlight
