#pragma once

#include <Eigen/Dense>

#include "slowlight/config.hpp"
#include "slowlight/grid.hpp"
#include "slowlight/spectral.hpp"

namespace slowlight {

/// Complex Rabi envelopes of the two optical channels.
struct FieldState {
  Complex omega_a{0.0, 0.0};
  Complex omega_b{0.0, 0.0};
};

/// Soliton phase pair (phi_s, theta_s).
struct Phases {
  double phi_s = 0.0;
  double theta_s = 0.0;
};

/// Closed-form one-soliton solution on the piecewise background: fields,
/// atomic state and density matrix at any (zeta, tau), plus grid sampling.
class AnalyticSolution {
 public:
  explicit AnalyticSolution(const ValidatedConfig& config);

  const ValidatedConfig& config() const { return config_; }
  const SpectralData& spectral() const { return spectral_; }

  Phases phases(double zeta, const SpectralPoint& sp) const;
  Phases phases(double zeta, double tau) const { return phases(zeta, spectral_.at(tau)); }

  FieldState fields(double zeta, const SpectralPoint& sp) const;
  FieldState fields(double zeta, double tau) const { return fields(zeta, spectral_.at(tau)); }

  /// One-sided field values: evaluates the given region's formulas at tau.
  FieldState fields_in_region(double zeta, double tau, Region region) const;

  Eigen::Vector3cd state(double zeta, const SpectralPoint& sp) const;
  Eigen::Vector3cd state(double zeta, double tau) const { return state(zeta, spectral_.at(tau)); }

  Eigen::Matrix3cd density(double zeta, double tau) const;

  /// Row-major sampling over the grid; spectral data is evaluated once per
  /// tau row. Throws GridError when the grid exceeds the node cap.
  GridSolution evaluate(const GridSpec& spec) const;

  /// zeta position of the soliton center (phi_s = 0) at the given tau.
  double soliton_center(double tau) const;
  double soliton_center(const SpectralPoint& sp) const;

  /// d(phi_s)/d(zeta), the inverse width of the sech envelope in zeta.
  double phase_zeta_slope() const { return kappa_; }

  /// Velocity dzeta/dtau of the phi_s = 0 level set in the initial region.
  double levelset_slope() const;

  static constexpr Eigen::Index kMaxGridNodes = 30'000'000;

 private:
  FieldState dressed_fields(double zeta, const SpectralPoint& sp, double omega) const;

  ValidatedConfig config_;
  SpectralData spectral_;
  double kappa_;       // (nu0/2) Im 1/(lambda - Delta)
  double theta_slope_; // (nu0/2) Re 1/(lambda - Delta)
  double abs_lambda_delta_;
};

}  // namespace slowlight
