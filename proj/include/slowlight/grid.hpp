#pragma once

#include <Eigen/Dense>
#include <complex>

#include "slowlight/config.hpp"

namespace slowlight {

/// Uniform sampling window in retarded time and space.
struct GridSpec {
  double tau_min = -3.0;
  double tau_max = 8.0;
  double tau_step = 0.01;
  double zeta_min = 0.0;
  double zeta_max = 12.0;
  double zeta_step = 0.02;
};

/// Node count of the axis min, min+step, ..., snapping so the last node
/// lands on max within round-off. Throws GridError on an empty/invalid range.
Eigen::Index axis_count(double min, double max, double step, const char* name);

/// Builds the axis described by axis_count.
Eigen::ArrayXd make_axis(double min, double max, double step, const char* name);

enum class Provenance { Analytic, Numeric };

/// Sampled fields and atomic state over a (tau, zeta) grid; row index is tau,
/// column index is zeta. The density matrix is stored as its independent
/// entries (real diagonal plus lower off-diagonals rho_ij = <i|rho|j>).
struct GridSolution {
  Eigen::ArrayXd tau;
  Eigen::ArrayXd zeta;
  Eigen::ArrayXXcd omega_a;
  Eigen::ArrayXXcd omega_b;
  Eigen::ArrayXXd rho11;
  Eigen::ArrayXXd rho22;
  Eigen::ArrayXXd rho33;
  Eigen::ArrayXXcd rho21;
  Eigen::ArrayXXcd rho31;
  Eigen::ArrayXXcd rho32;
  Provenance provenance = Provenance::Analytic;

  Eigen::Index n_tau() const { return tau.size(); }
  Eigen::Index n_zeta() const { return zeta.size(); }
  double tau_step() const { return tau.size() > 1 ? tau[1] - tau[0] : 0.0; }
  double zeta_step() const { return zeta.size() > 1 ? zeta[1] - zeta[0] : 0.0; }

  void allocate(const Eigen::ArrayXd& tau_axis, const Eigen::ArrayXd& zeta_axis);

  Eigen::Matrix3cd density(Eigen::Index i, Eigen::Index k) const;
  void set_density(Eigen::Index i, Eigen::Index k, const Eigen::Matrix3cd& rho);
};

/// Max-norm centered-difference residuals of the two evolution equations.
struct ResidualNorms {
  double field = 0.0;
  double atom = 0.0;
};

/// Residuals of d(H_I)/dzeta = i nu0/4 [D, rho] and
/// drho/dtau = i [(Delta/2) D - H_I, rho] over interior nodes, skipping nodes
/// within `buffer_width` (in tau units) of the schedule kinks
/// tau in {0, t1, t_revive}. A negative width means 3 nodes of the grid.
ResidualNorms residual_norm(const GridSolution& solution, const MediumConfig& medium,
                            const ControlSchedule& schedule, double buffer_width = -1.0);

/// L-infinity and RMS difference norms between two solutions on one grid.
struct ComparisonNorms {
  double field_linf = 0.0;
  double field_l2 = 0.0;
  double population_linf = 0.0;
  double population_l2 = 0.0;
  double field_linf_by_region[4] = {0.0, 0.0, 0.0, 0.0};
  double excluded_field_linf = 0.0; ///< largest field difference inside the excluded window
  double excluded_from = 0.0;
  double excluded_to = 0.0;
};

/// Compares two solutions on identical axes. Rows with tau inside
/// [exclude_from, exclude_to] are left out of the norms (their largest field
/// difference is still reported). Pass an empty window (from > to) to compare
/// everything.
ComparisonNorms compare(const GridSolution& a, const GridSolution& b,
                        const ControlSchedule& schedule, double exclude_from = 1.0,
                        double exclude_to = 0.0);

}  // namespace slowlight
