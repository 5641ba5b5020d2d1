#pragma once

#include <complex>

#include "slowlight/config.hpp"

namespace slowlight {

/// Root s of s^2 = lambda^2 + omega0^2 with Im(s)*Im(lambda) > 0, i.e. the
/// branch with s -> lambda as omega0 -> 0. Requires Im(lambda) != 0.
Complex branched_root(Complex lambda, double omega0);

/// Spectral data (w, z) of the dressed one-soliton solution at one retarded
/// time, with z tracked on a branch continuous in tau within its region.
struct SpectralPoint {
  Complex w;
  Complex z;
  Region region = Region::D0;
  double tau = 0.0;
};

/// Per-configuration constants of the piecewise spectral data: branch root s,
/// asymptotic ratio w0, Bessel index, matching constants for each region and
/// the stored-phase value z2.
class SpectralData {
 public:
  explicit SpectralData(const ValidatedConfig& config);

  /// w(tau) of the active region. Throws PoleError at a vanishing denominator.
  Complex w(double tau) const;

  /// z(tau) with the region-continuous logarithm branch, anchored to the
  /// principal value at the region's left endpoint.
  Complex z(double tau) const;

  SpectralPoint at(double tau) const;

  /// Matching constant of the given region (0, C1, C1, C3).
  Complex constant(Region region) const;

  Complex s() const { return s_; }
  Complex w0() const { return w0_; }
  Complex gamma_index() const { return gamma_; }
  Complex z2() const { return z2_; }

  /// Evaluates w and z with a forced region, ignoring where tau actually
  /// falls. Used for one-sided limits at the region boundaries.
  Complex w_in_region(double tau, Region region) const;
  Complex z_in_region(double tau, Region region) const;

 private:
  Complex bessel_ratio_numerator(Complex x) const;   // C1 J_{1-g} - J_{g-1}
  Complex bessel_ratio_denominator(Complex x) const; // C1 J_{-g} + J_g
  Complex d3_bracket(double tau) const;
  Complex continuous_log_d1(double tau) const;
  Complex continuous_log_d3(double tau) const;

  ValidatedConfig config_;
  Complex s_;
  Complex w0_;
  Complex gamma_;
  double x0_ = 0.0; // -omega0 / (2 alpha)
  Complex c1_;
  Complex c3_;
  Complex n0_; // C1 J_{-g}(x0) + J_g(x0)
  Complex z2_;
  double d1_unwrap_step_ = 0.0;
  double d3_unwrap_step_ = 0.0;
};

}  // namespace slowlight
