#pragma once

#include <vector>

#include "slowlight/grid.hpp"

namespace slowlight {

/// One tracked peak: per-tau argmax over zeta with sub-cell refinement.
struct TrackSample {
  double tau = 0.0;
  double zeta_peak = 0.0;
  double value = 0.0;
};

enum class Observable { FieldIntensity, Rho22 };

/// Tracks the per-tau-row peak of |Omega_a|^2 or rho22 with 3-point parabolic
/// refinement. Rows whose peak value is below `noise_floor` are omitted.
std::vector<TrackSample> track_peak(const GridSolution& solution, Observable observable,
                                    double noise_floor = 1e-6);

/// Least-squares line fit over the samples with tau inside [tau_lo, tau_hi].
struct VelocityFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  int samples = 0;
  double tau_lo = 0.0, tau_hi = 0.0;
};

/// Throws ValidationError when fewer than 5 samples fall in the window.
VelocityFit estimate_velocity(const std::vector<TrackSample>& track, double tau_lo,
                              double tau_hi);

}  // namespace slowlight
