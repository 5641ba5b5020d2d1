#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace slowlight {

using Complex = std::complex<double>;

/// Medium constants in the dimensionless normalization (retarded time in
/// units of the pulse length, Rabi frequencies in inverse time units).
struct MediumConfig {
  double nu0 = 4.5;   ///< atom-field coupling constant
  double delta = 0.0; ///< one-photon detuning
};

/// Piecewise controlling-background schedule: constant omega0 for tau <= 0,
/// exponential decay with rate alpha on (0, t1], zero on (t1, t_revive],
/// constant omega0 again afterwards.
struct ControlSchedule {
  double omega0 = 3.0;
  double alpha = 4.0;
  double t1 = 1.0;       ///< cut-off time of the decaying tail; default 4/alpha
  double t_revive = 4.0; ///< switch-on time; default 4/alpha + 3
};

/// Soliton dressing parameters. A missing phi0 is resolved during validation
/// so that the soliton center crosses zeta = 0 at tau = -2.
struct SolitonConfig {
  Complex lambda{0.0, -4.1}; ///< complex spectral parameter
  std::optional<double> phi0;
  double theta0 = 0.0;
};

/// Time regions of the control schedule: (-inf,0], (0,t1], (t1,t_revive],
/// (t_revive,inf). Boundaries belong to the earlier region.
enum class Region { D0, D1, D2, D3 };

const char* region_name(Region r);

Region region_of(double tau, const ControlSchedule& schedule);

double background_field(double tau, const ControlSchedule& schedule);

/// Raw configuration as read from a file, before validation.
struct Config {
  MediumConfig medium;
  ControlSchedule schedule;
  SolitonConfig soliton;
  std::vector<std::string> defaulted_keys; ///< keys absent from the file
};

/// Immutable parameter set with every invariant checked and phi0 resolved.
struct ValidatedConfig {
  MediumConfig medium;
  ControlSchedule schedule;
  Complex lambda;
  double phi0 = 0.0;
  double theta0 = 0.0;
  std::vector<std::string> warnings;
};

/// Checks all invariants; throws ValidationError naming the first violation.
ValidatedConfig validate_config(const Config& config);

/// Parses "a", "bi", "a+bi" (also accepts "j" for the imaginary unit).
Complex parse_complex(const std::string& text);

std::string format_complex(Complex value);

/// Parses key=value lines ('#' starts a comment). Unknown keys are an error;
/// missing keys keep their defaults and are listed in defaulted_keys.
Config parse_config(std::istream& in);

Config load_config(const std::string& path);

/// FNV-1a hash of the canonical key=value rendering, for report provenance.
std::string config_hash(const ValidatedConfig& config);

std::string render_config(const ValidatedConfig& config);

}  // namespace slowlight
