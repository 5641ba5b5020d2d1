#include "slowlight/tracking.hpp"

#include <cmath>

#include "slowlight/errors.hpp"

namespace slowlight {

std::vector<TrackSample> track_peak(const GridSolution& solution, Observable observable,
                                    double noise_floor) {
  if (solution.n_zeta() < 3) throw GridError("track_peak needs at least 3 zeta nodes");
  std::vector<TrackSample> track;
  const double h = solution.zeta_step();
  Eigen::ArrayXd row;
  for (Eigen::Index i = 0; i < solution.n_tau(); ++i) {
    if (observable == Observable::FieldIntensity)
      row = solution.omega_a.row(i).abs2();
    else
      row = solution.rho22.row(i);
    Eigen::Index j = 0;
    const double peak = row.maxCoeff(&j);
    if (!(peak >= noise_floor)) continue;
    // an argmax on the window edge usually means the real peak lies outside;
    // it carries no sub-cell information either way
    if (j == 0 || j + 1 == solution.n_zeta()) continue;

    TrackSample sample{solution.tau[i], solution.zeta[j], peak};
    const double vm = row[j - 1], v0 = row[j], vp = row[j + 1];
    const double denom = vm - 2.0 * v0 + vp;
    if (denom < 0.0) {
      double shift = 0.5 * (vm - vp) / denom;
      shift = std::clamp(shift, -0.5, 0.5);
      sample.zeta_peak += shift * h;
      sample.value = v0 - 0.25 * (vm - vp) * shift;
    }
    track.push_back(sample);
  }
  return track;
}

VelocityFit estimate_velocity(const std::vector<TrackSample>& track, double tau_lo,
                              double tau_hi) {
  VelocityFit fit;
  fit.tau_lo = tau_lo;
  fit.tau_hi = tau_hi;
  double sx = 0.0, sy = 0.0;
  for (const TrackSample& s : track)
    if (s.tau >= tau_lo && s.tau <= tau_hi) {
      sx += s.tau;
      sy += s.zeta_peak;
      ++fit.samples;
    }
  if (fit.samples < 5)
    throw ValidationError("estimate_velocity: fewer than 5 track samples in the window");
  const double mx = sx / fit.samples, my = sy / fit.samples;
  double sxx = 0.0, sxy = 0.0;
  for (const TrackSample& s : track)
    if (s.tau >= tau_lo && s.tau <= tau_hi) {
      sxx += (s.tau - mx) * (s.tau - mx);
      sxy += (s.tau - mx) * (s.zeta_peak - my);
    }
  if (sxx == 0.0) throw ValidationError("estimate_velocity: degenerate window");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (const TrackSample& s : track)
    if (s.tau >= tau_lo && s.tau <= tau_hi) {
      const double r = s.zeta_peak - (fit.intercept + fit.slope * s.tau);
      ss += r * r;
    }
  fit.rms_residual = std::sqrt(ss / fit.samples);
  return fit;
}

}  // namespace slowlight
