#include <doctest.h>

#include <cmath>
#include <complex>

#include "reference_values.hpp"
#include "slowlight/errors.hpp"
#include "slowlight/spectral.hpp"

using namespace slowlight;

namespace {

ValidatedConfig defaults() { return validate_config(Config{}); }

double err(Complex got, Complex want) { return std::abs(got - want); }

}  // namespace

TEST_CASE("branched root: sign rule and limits") {
  CHECK(err(branched_root(Complex(0, -4.1), 3.0), refval::default_s) < 1e-14);
  CHECK(err(branched_root(Complex(0, 4.1), 3.0), refval::conjugate_s) < 1e-14);
  // omega0 -> 0 limit: s = lambda
  CHECK(err(branched_root(Complex(0, -4.1), 0.0), Complex(0, -4.1)) < 1e-14);
  CHECK(err(branched_root(Complex(1.2, 0.7), 0.0), Complex(1.2, 0.7)) < 1e-14);
  // s^2 = lambda^2 + omega0^2 for generic complex lambda
  const Complex lambda(0.8, -1.9);
  const Complex s = branched_root(lambda, 2.3);
  CHECK(err(s * s, lambda * lambda + 2.3 * 2.3) < 1e-13);
  CHECK(s.imag() * lambda.imag() > 0.0);
}

TEST_CASE("branched root: rejected inputs") {
  CHECK_THROWS_AS(branched_root(Complex(2.0, 0.0), 3.0), DomainError);
  // purely imaginary lambda inside the band makes the root real
  CHECK_THROWS_AS(branched_root(Complex(0, -1.0), 3.0), DegenerateParameterError);
  CHECK_THROWS_AS(branched_root(Complex(0, -3.0), 3.0), DegenerateParameterError);
}

TEST_CASE("spectral constants at the default parameters") {
  const SpectralData sd(defaults());
  CHECK(err(sd.s(), refval::default_s) < 1e-14);
  CHECK(err(sd.w0(), refval::default_w0) < 1e-14);
  CHECK(err(sd.gamma_index(), refval::default_gamma_index) < 1e-14);
  CHECK(err(sd.constant(Region::D0), Complex(0, 0)) == 0.0);
  CHECK(err(sd.constant(Region::D1), refval::default_c1) < 1e-13);
  CHECK(err(sd.constant(Region::D2), refval::default_c1) < 1e-13);
  CHECK(err(sd.constant(Region::D3), refval::default_c3) < 1e-14);
  CHECK(err(sd.z2(), refval::default_z2) < 1e-13);
  // revival constant equals w0^2
  CHECK(err(sd.constant(Region::D3), sd.w0() * sd.w0()) < 1e-14);
}

TEST_CASE("spectral w: piecewise values against the oracle") {
  const SpectralData sd(defaults());
  CHECK(err(sd.w(-3.0), refval::default_w0) < 1e-15);
  CHECK(err(sd.w(0.0), refval::default_w0) < 1e-15);
  CHECK(err(sd.w(0.25), refval::default_w_at_0p25) < 1e-13);
  CHECK(err(sd.w(0.5), refval::default_w_at_0p5) < 1e-13);
  CHECK(err(sd.w(1.0), refval::default_w_at_1) < 1e-13);
  CHECK(sd.w(2.0) == Complex(0, 0));
  CHECK(sd.w(4.0) == Complex(0, 0));
  CHECK(err(sd.w(5.0), refval::default_w_at_5) < 1e-13);
  CHECK(err(sd.w(6.5), refval::default_w_at_6p5) < 1e-13);
}

TEST_CASE("spectral z: piecewise values against the oracle") {
  const SpectralData sd(defaults());
  CHECK(err(sd.z(0.0), Complex(0, 0)) < 1e-15);
  CHECK(err(sd.z(0.5), refval::default_z_at_0p5) < 1e-13);
  CHECK(err(sd.z(1.0), refval::default_z_at_1) < 1e-13);
  CHECK(err(sd.z(2.5), refval::default_z2) < 1e-13);
  CHECK(err(sd.z(5.0), refval::default_z_at_5) < 1e-13);
  CHECK(err(sd.z(6.5), refval::default_z_at_6p5) < 1e-13);
  // linear in tau before the switch-off
  CHECK(err(sd.z(-2.0), Complex(0, 0.5) * 3.0 * sd.w0() * -2.0) < 1e-14);
}

TEST_CASE("spectral data: continuity at the region boundaries") {
  const SpectralData sd(defaults());
  // tau = 0: the decay-region quotient reproduces w0 through the matching constant
  CHECK(err(sd.w_in_region(1e-14, Region::D1), sd.w0()) < 1e-10);
  CHECK(err(sd.z_in_region(1e-14, Region::D1), Complex(0, 0)) < 1e-10);
  // tau = t_revive: w vanishes from both sides, z continues from z2
  CHECK(err(sd.w_in_region(4.0, Region::D3), Complex(0, 0)) < 1e-14);
  CHECK(err(sd.z_in_region(4.0, Region::D3), sd.z2()) < 1e-14);
  const double eps = 1e-8;
  CHECK(err(sd.w(4.0 + eps), Complex(0, 0)) < 1e-7);
  CHECK(err(sd.z(4.0 + eps), sd.z2()) < 1e-7);
}

TEST_CASE("spectral w: revival region relaxes back to w0") {
  const SpectralData sd(defaults());
  // decay scale of the revival transient is |Im(lambda - s)|
  CHECK(err(sd.w(12.0), sd.w0()) < 1e-8);
  CHECK(std::abs(sd.w(9.0) - sd.w0()) < std::abs(sd.w(7.0) - sd.w0()));
  CHECK(std::abs(sd.w(7.0) - sd.w0()) < std::abs(sd.w(5.0) - sd.w0()));
}

TEST_CASE("spectral z: stored phase equals the uncut decay limit") {
  // z2 is the tau -> inf limit of the decay-region z with the tail kept:
  // evaluate the decay formula far past the cut and compare against z2.
  ValidatedConfig config = defaults();
  config.schedule.t1 = 7.0; // keep the tail alive much longer
  config.schedule.t_revive = 10.0;
  const SpectralData sd(config);
  CHECK(err(sd.z_in_region(6.5, Region::D1), sd.z2()) < 1e-9);
  CHECK(err(sd.w_in_region(6.5, Region::D1), Complex(0, 0)) < 1e-9);
}

TEST_CASE("degenerate parameters are rejected by name") {
  // gamma = (alpha + i lambda)/(2 alpha) integer: lambda = -i alpha gives 1
  Config config;
  config.soliton.lambda = Complex(0.0, -4.0);
  CHECK_THROWS_AS(SpectralData(validate_config(config)), DegenerateParameterError);
  // gamma = 2
  Config config2;
  config2.soliton.lambda = Complex(0.0, -12.0);
  config2.schedule.omega0 = 3.0;
  CHECK_THROWS_AS(SpectralData(validate_config(config2)), DegenerateParameterError);
}

TEST_CASE("spectral data for the conjugate spectral parameter") {
  Config config;
  config.soliton.lambda = Complex(0.0, 4.1);
  const SpectralData sd(validate_config(config));
  // conjugate symmetry of the branch rule: w0(conj lambda) = conj(w0(lambda))
  CHECK(err(sd.w0(), std::conj(refval::default_w0)) < 1e-14);
  // the decay-region index is not the conjugate (gamma flips to -0.0125),
  // but the matching construction still glues w to w0 at tau = 0
  CHECK(err(sd.gamma_index(), Complex(-0.0125, 0.0)) < 1e-14);
  CHECK(err(sd.w_in_region(1e-14, Region::D1), sd.w0()) < 1e-10);
}
