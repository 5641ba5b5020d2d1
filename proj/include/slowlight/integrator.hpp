#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

#include "slowlight/analytic.hpp"
#include "slowlight/config.hpp"
#include "slowlight/grid.hpp"

namespace slowlight {

/// Interaction Hamiltonian -1/2 (Omega_a |3><1| + Omega_b |3><2|) + h.c.
/// Hermitian; only the (3,1) and (3,2) entries and their conjugates are
/// populated.
Eigen::Matrix3cd hamiltonian_from_fields(const FieldState& fields);

/// One unitary step of the atomic evolution: rho -> U rho U^dagger with
/// U = exp(i h ((Delta/2) D - H_I)) built from the midpoint fields, computed
/// by diagonalizing the Hermitian generator. Preserves trace and purity to
/// round-off. Throws StepSizeError when h * max(|Omega|, |Delta|) >= 0.5.
Eigen::Matrix3cd atom_step(const Eigen::Matrix3cd& rho, const FieldState& midpoint_fields,
                           double h_tau, const MediumConfig& medium);

/// Scalar reduction of d(H_I)/dzeta = i nu0/4 [D, rho]:
/// returns (dOmega_a/dzeta, dOmega_b/dzeta) = (i nu0 rho_31, i nu0 rho_32).
std::pair<Complex, Complex> field_derivative(const Eigen::Matrix3cd& rho,
                                             const MediumConfig& medium);

/// Space-marching scheme parameters.
struct SchemeConfig {
  double h_tau = 0.005;
  double h_zeta = 0.05;
  int corrector_iterations = 1; ///< 1 = Heun (one trapezoidal correction)
};

/// Driving data of one marching problem. Boundary fields are sampled on the
/// tau grid at zeta = zeta_min; the initial atomic state is sampled along
/// zeta at tau = tau_min. A jump entry (tau_j, delta) declares that the field
/// data is discontinuous at the tau node tau_j, whose stored value is the
/// left limit; the step leaving that node adds delta. Jumps must land on tau
/// nodes. The jump of the marched fields is constant in zeta because the
/// atomic state stays continuous in tau, so one delta per jump suffices.
struct ProblemData {
  std::function<FieldState(double tau)> boundary_fields;
  std::function<Eigen::Vector3cd(double zeta)> initial_state;
  std::vector<std::pair<double, FieldState>> boundary_jumps;
};

GridSolution integrate(const ProblemData& data, const MediumConfig& medium,
                       const GridSpec& spec, const SchemeConfig& scheme);

/// Convenience wrapper: boundary fields, initial atoms and the schedule's
/// jump values all come from the closed-form solution. Values at tau_min and
/// the jump nodes follow the one-sided conventions described in
/// analytic_problem_data.
GridSolution integrate(const AnalyticSolution& boundary, const GridSpec& spec,
                       const SchemeConfig& scheme);

/// Builds the ProblemData of the closed-form solution on spec's window.
/// tau_min is evaluated one-sided from the right, so a run may be anchored
/// exactly at a region cut; jumps at t1/t_revive inside the window are
/// registered with their analytic deltas.
ProblemData analytic_problem_data(const AnalyticSolution& boundary, const GridSpec& spec);

/// Richardson-style observed orders from runs at steps (h, h/2, h/4).
struct ConvergenceReport {
  double error_coarse = 0.0, error_mid = 0.0, error_fine = 0.0;
  double order_coarse = 0.0; ///< log2(e_h / e_{h/2})
  double order_fine = 0.0;   ///< log2(e_{h/2} / e_{h/4})
  bool monotone = false;
  bool conclusive = false;
};

ConvergenceReport order_from_errors(double e_coarse, double e_mid, double e_fine);

/// Residual norms of the sampled closed-form solution at steps (h, h/2, h/4),
/// halving both axes, with observed orders per equation. The kink buffer is
/// `boundary_buffer` nodes of the coarsest grid, held at that width on the
/// finer grids so all three norms run over the same included set.
struct ResidualConvergence {
  ConvergenceReport field;
  ConvergenceReport atom;
};

ResidualConvergence residual_convergence(const AnalyticSolution& solution, GridSpec window,
                                         int boundary_buffer = 3);

/// Field L-infinity error of integrate() against the closed-form solution at
/// steps (h, h/2, h/4), halving both axes. `end_buffer` tau nodes are skipped
/// at the window ends (scaled with the grid so the compared sets match).
ConvergenceReport integrator_convergence(const AnalyticSolution& solution, GridSpec window,
                                         SchemeConfig coarse, int end_buffer = 3);

}  // namespace slowlight
