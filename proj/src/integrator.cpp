#include "slowlight/integrator.hpp"

#include <cmath>

#include "slowlight/errors.hpp"

namespace slowlight {

Eigen::Matrix3cd hamiltonian_from_fields(const FieldState& fields) {
  Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
  h(2, 0) = -0.5 * fields.omega_a;
  h(2, 1) = -0.5 * fields.omega_b;
  h(0, 2) = std::conj(h(2, 0));
  h(1, 2) = std::conj(h(2, 1));
  return h;
}

Eigen::Matrix3cd atom_step(const Eigen::Matrix3cd& rho, const FieldState& midpoint_fields,
                           double h_tau, const MediumConfig& medium) {
  const double scale = std::max({std::abs(midpoint_fields.omega_a),
                                 std::abs(midpoint_fields.omega_b), std::abs(medium.delta)});
  if (h_tau * scale >= 0.5)
    throw StepSizeError("atom_step: h_tau * max(|Omega|, |Delta|) must stay below 0.5");

  Eigen::Matrix3cd gen = -hamiltonian_from_fields(midpoint_fields);
  gen(0, 0) += 0.5 * medium.delta;
  gen(1, 1) += 0.5 * medium.delta;
  gen(2, 2) -= 0.5 * medium.delta;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> eig(gen);
  Eigen::Vector3cd exp_phase;
  for (int m = 0; m < 3; ++m)
    exp_phase(m) = std::exp(Complex(0.0, h_tau * eig.eigenvalues()(m)));
  const Eigen::Matrix3cd u =
      eig.eigenvectors() * exp_phase.asDiagonal() * eig.eigenvectors().adjoint();
  return u * rho * u.adjoint();
}

std::pair<Complex, Complex> field_derivative(const Eigen::Matrix3cd& rho,
                                             const MediumConfig& medium) {
  return {Complex(0.0, medium.nu0) * rho(2, 0), Complex(0.0, medium.nu0) * rho(2, 1)};
}

namespace {

struct JumpNode {
  Eigen::Index index = -1; // tau node carrying the left value of a field jump
  Complex delta_a{0.0, 0.0};
  Complex delta_b{0.0, 0.0};
};

// Sweeps the atomic state up one zeta column; fields hold tau-node values.
void sweep_column(const Eigen::Vector3cd& psi0, const Eigen::ArrayXcd& oa,
                  const Eigen::ArrayXcd& ob, double h_tau, const MediumConfig& medium,
                  const std::vector<JumpNode>& jumps, std::vector<Eigen::Matrix3cd>& out) {
  const auto n = oa.size();
  Eigen::Matrix3cd rho = psi0 * psi0.adjoint();
  out[0] = rho;
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    Complex a0 = oa[j], b0 = ob[j];
    for (const JumpNode& jn : jumps)
      if (jn.index == j) {
        a0 += jn.delta_a;
        b0 += jn.delta_b;
      }
    const FieldState mid{0.5 * (a0 + oa[j + 1]), 0.5 * (b0 + ob[j + 1])};
    rho = atom_step(rho, mid, h_tau, medium);
    out[j + 1] = rho;
  }
}

}  // namespace

GridSolution integrate(const ProblemData& data, const MediumConfig& medium,
                       const GridSpec& spec, const SchemeConfig& scheme) {
  if (!(scheme.h_tau > 0.0) || !(scheme.h_zeta > 0.0))
    throw GridError("integrate: step sizes must be positive");
  if (scheme.corrector_iterations < 1)
    throw GridError("integrate: at least one corrector iteration is required");

  if (axis_count(spec.tau_min, spec.tau_max, scheme.h_tau, "tau") *
          axis_count(spec.zeta_min, spec.zeta_max, scheme.h_zeta, "zeta") >
      AnalyticSolution::kMaxGridNodes)
    throw GridError("integrate: requested grid exceeds the node cap");
  const Eigen::ArrayXd tau_axis = make_axis(spec.tau_min, spec.tau_max, scheme.h_tau, "tau");
  const Eigen::ArrayXd zeta_axis =
      make_axis(spec.zeta_min, spec.zeta_max, scheme.h_zeta, "zeta");
  const Eigen::Index n_tau = tau_axis.size();
  const Eigen::Index n_zeta = zeta_axis.size();
  if (n_tau < 2 || n_zeta < 1) throw GridError("integrate: window too small");

  const double h_tau = scheme.h_tau;
  const double h_zeta = scheme.h_zeta;

  std::vector<JumpNode> jumps;
  for (const auto& [tau_j, delta] : data.boundary_jumps) {
    if (tau_j <= tau_axis[0] || tau_j >= tau_axis[n_tau - 1]) continue;
    const double pos = (tau_j - spec.tau_min) / h_tau;
    if (std::abs(pos - std::round(pos)) > 1e-6)
      throw GridError("integrate: field jump at tau=" + std::to_string(tau_j) +
                      " does not land on a tau node; adjust h_tau");
    jumps.push_back({static_cast<Eigen::Index>(std::llround(pos)), delta.omega_a,
                     delta.omega_b});
  }

  Eigen::ArrayXcd oa(n_tau), ob(n_tau);
  for (Eigen::Index j = 0; j < n_tau; ++j) {
    const FieldState f = data.boundary_fields(tau_axis[j]);
    oa[j] = f.omega_a;
    ob[j] = f.omega_b;
  }

  GridSolution out;
  out.allocate(tau_axis, zeta_axis);
  out.provenance = Provenance::Numeric;

  std::vector<Eigen::Matrix3cd> rhos(n_tau), rhos_pred(n_tau);
  sweep_column(data.initial_state(zeta_axis[0]), oa, ob, h_tau, medium, jumps, rhos);

  auto store_column = [&](Eigen::Index k, const Eigen::ArrayXcd& a, const Eigen::ArrayXcd& b,
                          const std::vector<Eigen::Matrix3cd>& r) {
    for (Eigen::Index j = 0; j < n_tau; ++j) {
      out.omega_a(j, k) = a[j];
      out.omega_b(j, k) = b[j];
      out.set_density(j, k, r[j]);
    }
    if (!a.isFinite().all() || !b.isFinite().all())
      throw DivergenceError("integrate: non-finite field at zeta=" +
                            std::to_string(zeta_axis[k]));
  };
  store_column(0, oa, ob, rhos);

  Eigen::ArrayXcd f0a(n_tau), f0b(n_tau), f1a(n_tau), f1b(n_tau), oa_next(n_tau),
      ob_next(n_tau);
  for (Eigen::Index k = 0; k + 1 < n_zeta; ++k) {
    for (Eigen::Index j = 0; j < n_tau; ++j) {
      const auto [da, db] = field_derivative(rhos[j], medium);
      f0a[j] = da;
      f0b[j] = db;
    }
    // Euler predictor, then trapezoidal corrector(s)
    oa_next = oa + h_zeta * f0a;
    ob_next = ob + h_zeta * f0b;
    const Eigen::Vector3cd psi_next = data.initial_state(zeta_axis[k + 1]);
    for (int it = 0; it < scheme.corrector_iterations; ++it) {
      sweep_column(psi_next, oa_next, ob_next, h_tau, medium, jumps, rhos_pred);
      for (Eigen::Index j = 0; j < n_tau; ++j) {
        const auto [da, db] = field_derivative(rhos_pred[j], medium);
        f1a[j] = da;
        f1b[j] = db;
      }
      oa_next = oa + 0.5 * h_zeta * (f0a + f1a);
      ob_next = ob + 0.5 * h_zeta * (f0b + f1b);
    }
    oa = oa_next;
    ob = ob_next;
    sweep_column(psi_next, oa, ob, h_tau, medium, jumps, rhos);
    store_column(k + 1, oa, ob, rhos);
  }
  return out;
}

ProblemData analytic_problem_data(const AnalyticSolution& boundary, const GridSpec& spec) {
  const ControlSchedule& schedule = boundary.config().schedule;
  const double zeta0 = spec.zeta_min;
  const double tau_min = spec.tau_min;
  const Region init_region = region_of(std::nextafter(tau_min, tau_min + 1.0), schedule);

  ProblemData data;
  data.boundary_fields = [&boundary, zeta0, tau_min, init_region](double tau) {
    if (tau == tau_min) return boundary.fields_in_region(zeta0, tau, init_region);
    return boundary.fields(zeta0, tau);
  };
  data.initial_state = [&boundary, tau_min, init_region](double zeta) {
    const SpectralData& sd = boundary.spectral();
    const SpectralPoint sp{sd.w_in_region(tau_min, init_region),
                           sd.z_in_region(tau_min, init_region), init_region, tau_min};
    return boundary.state(zeta, sp);
  };

  const Region after[2] = {Region::D2, Region::D3};
  const double times[2] = {schedule.t1, schedule.t_revive};
  for (int q = 0; q < 2; ++q) {
    if (times[q] <= tau_min || times[q] >= spec.tau_max) continue;
    const FieldState left = boundary.fields(zeta0, times[q]);
    const FieldState right = boundary.fields_in_region(zeta0, times[q], after[q]);
    data.boundary_jumps.push_back(
        {times[q], {right.omega_a - left.omega_a, right.omega_b - left.omega_b}});
  }
  return data;
}

GridSolution integrate(const AnalyticSolution& boundary, const GridSpec& spec,
                       const SchemeConfig& scheme) {
  return integrate(analytic_problem_data(boundary, spec), boundary.config().medium, spec,
                   scheme);
}

ConvergenceReport order_from_errors(double e_coarse, double e_mid, double e_fine) {
  ConvergenceReport report;
  report.error_coarse = e_coarse;
  report.error_mid = e_mid;
  report.error_fine = e_fine;
  report.monotone = e_coarse > e_mid && e_mid > e_fine && e_fine >= 0.0;
  if (report.monotone && e_mid > 0.0 && e_fine > 0.0) {
    report.order_coarse = std::log2(e_coarse / e_mid);
    report.order_fine = std::log2(e_mid / e_fine);
    report.conclusive = true;
  }
  return report;
}

ResidualConvergence residual_convergence(const AnalyticSolution& solution, GridSpec window,
                                         int boundary_buffer) {
  double field_norms[3], atom_norms[3];
  GridSpec spec = window;
  // keep the excluded width fixed across levels, cut strictly between nodes
  const double buffer_width = (boundary_buffer + 1) * window.tau_step * (1.0 - 1e-9);
  for (int level = 0; level < 3; ++level) {
    const GridSolution grid = solution.evaluate(spec);
    const ResidualNorms norms = residual_norm(grid, solution.config().medium,
                                              solution.config().schedule, buffer_width);
    field_norms[level] = norms.field;
    atom_norms[level] = norms.atom;
    spec.tau_step *= 0.5;
    spec.zeta_step *= 0.5;
  }
  return {order_from_errors(field_norms[0], field_norms[1], field_norms[2]),
          order_from_errors(atom_norms[0], atom_norms[1], atom_norms[2])};
}

ConvergenceReport integrator_convergence(const AnalyticSolution& solution, GridSpec window,
                                         SchemeConfig coarse, int end_buffer) {
  double errors[3];
  SchemeConfig scheme = coarse;
  for (int level = 0; level < 3; ++level) {
    window.tau_step = scheme.h_tau;
    window.zeta_step = scheme.h_zeta;
    const GridSolution numeric = integrate(solution, window, scheme);
    GridSpec sample = window;
    const GridSolution analytic = solution.evaluate(sample);
    const int buffer = end_buffer;
    double err = 0.0;
    for (Eigen::Index i = buffer; i < numeric.n_tau() - buffer; ++i)
      for (Eigen::Index k = 0; k < numeric.n_zeta(); ++k)
        err = std::max({err, std::abs(numeric.omega_a(i, k) - analytic.omega_a(i, k)),
                        std::abs(numeric.omega_b(i, k) - analytic.omega_b(i, k))});
    errors[level] = err;
    scheme.h_tau *= 0.5;
    scheme.h_zeta *= 0.5;
  }
  return order_from_errors(errors[0], errors[1], errors[2]);
}

}  // namespace slowlight
