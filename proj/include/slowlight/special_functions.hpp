#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "slowlight/errors.hpp"

namespace slowlight {

/// Principal complex logarithm, Im in (-pi, pi]. A negative real input with a
/// signed zero imaginary part is treated as approached from above, so the
/// imaginary part is +pi.
template <typename Real>
std::complex<Real> log_principal(std::complex<Real> z) {
  Real im = z.imag() == Real(0) ? Real(0) : z.imag();
  return std::log(std::complex<Real>(z.real(), im));
}

/// base^exponent on the principal branch, exp(exponent * Log base).
template <typename Real>
std::complex<Real> complex_pow_principal(std::complex<Real> base, std::complex<Real> exponent) {
  if (base == std::complex<Real>(0)) {
    if (exponent.real() > Real(0)) return {Real(0), Real(0)};
    throw DomainError("complex_pow_principal: zero base with Re(exponent) <= 0");
  }
  return std::exp(exponent * log_principal(base));
}

namespace detail {

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set).
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

// Gamma(z) for Re(z) >= 0.5 via the Lanczos approximation.
template <typename Real>
std::complex<Real> gamma_lanczos_right(std::complex<Real> z) {
  std::complex<Real> sum(kLanczos[0], 0);
  for (int k = 1; k < 15; ++k) sum += Real(kLanczos[k]) / (z + Real(k - 1));
  const std::complex<Real> t = z + Real(kLanczosG - 0.5);
  const Real sqrt_two_pi = Real(2.5066282746310005024157652848110);
  // Gamma(z) = sqrt(2 pi) t^(z-1/2) e^(-t) sum
  return sqrt_two_pi * std::exp((z - Real(0.5)) * std::log(t) - t) * sum;
}

}  // namespace detail

/// 1/Gamma(z). Entire; exactly zero at non-positive integers.
template <typename Real>
std::complex<Real> gamma_reciprocal(std::complex<Real> z) {
  if (z.imag() == Real(0)) {
    const Real zr = z.real();
    if (zr <= Real(0) && zr == std::floor(zr)) return {Real(0), Real(0)};
  }
  if (z.real() >= Real(0.5)) return Real(1) / detail::gamma_lanczos_right(z);
  // reflection: 1/Gamma(z) = Gamma(1-z) sin(pi z) / pi
  const Real pi = Real(3.14159265358979323846264338327950288);
  return detail::gamma_lanczos_right(Real(1) - z) * std::sin(pi * z) / pi;
}

/// Bessel function of the first kind, complex order and argument, by the
/// ascending series (x/2)^nu sum_k (-x^2/4)^k / (k! Gamma(nu+k+1)). The
/// prefactor uses the principal branch, which fixes the value on the negative
/// real axis. Intended for |x| <= 5 where the series converges in a few terms.
template <typename Real>
std::complex<Real> bessel_j(std::complex<Real> nu, std::complex<Real> x) {
  using C = std::complex<Real>;
  if (x == C(0)) {
    if (nu == C(0)) return C(1);
    if (nu.real() > Real(0)) return C(0);
    throw DomainError("bessel_j: argument 0 with Re(order) <= 0");
  }
  const C prefactor = complex_pow_principal(x / Real(2), nu);
  const C q = -x * x / Real(4);
  C sum(0), power(1);
  Real sum_scale(1);
  bool converged = false;
  for (int k = 0; k < 200; ++k) {
    const C term = power * gamma_reciprocal(nu + Real(k + 1));
    sum += term;
    sum_scale = std::max(sum_scale, std::abs(sum));
    power *= q / Real(k + 1);
    // |power| bounds every remaining term's k!-free factor; past the Gamma
    // poles gamma_reciprocal only shrinks it further.
    if (k >= 1 && std::abs(power) < Real(1e-17) * sum_scale) {
      converged = true;
      break;
    }
  }
  if (!converged) throw AccuracyError("bessel_j: series did not converge within 200 terms");
  return prefactor * sum;
}

}  // namespace slowlight
