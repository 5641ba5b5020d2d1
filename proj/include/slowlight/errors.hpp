#pragma once

#include <stdexcept>
#include <string>

namespace slowlight {

/// Invalid parameter set (violated invariant, malformed config file).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside a function's mathematical domain.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A series or iteration failed to reach its accuracy target.
class AccuracyError : public std::runtime_error {
 public:
  explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

/// Parameter combination that degenerates the closed-form solution
/// (integer Bessel index, vanishing spectral denominator, ...).
class DegenerateParameterError : public std::runtime_error {
 public:
  explicit DegenerateParameterError(const std::string& what) : std::runtime_error(what) {}
};

/// Pole of a spectral function hit at a specific retarded time.
class PoleError : public std::runtime_error {
 public:
  PoleError(const std::string& what, double tau)
      : std::runtime_error(what + " at tau=" + std::to_string(tau)), tau_(tau) {}
  double tau() const { return tau_; }

 private:
  double tau_;
};

/// Bad grid request (empty range, non-positive step, memory cap, mismatch).
class GridError : public std::runtime_error {
 public:
  explicit GridError(const std::string& what) : std::runtime_error(what) {}
};

/// Violation of the unitary-step stability guard.
class StepSizeError : public std::runtime_error {
 public:
  explicit StepSizeError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite value produced while marching.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// I/O failure while writing outputs.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace slowlight
