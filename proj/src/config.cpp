#include "slowlight/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "slowlight/errors.hpp"
#include "slowlight/spectral.hpp"

namespace slowlight {

const char* region_name(Region r) {
  switch (r) {
    case Region::D0: return "D0";
    case Region::D1: return "D1";
    case Region::D2: return "D2";
    case Region::D3: return "D3";
  }
  return "?";
}

Region region_of(double tau, const ControlSchedule& schedule) {
  if (tau <= 0.0) return Region::D0;
  if (tau <= schedule.t1) return Region::D1;
  if (tau <= schedule.t_revive) return Region::D2;
  return Region::D3;
}

double background_field(double tau, const ControlSchedule& schedule) {
  switch (region_of(tau, schedule)) {
    case Region::D0: return schedule.omega0;
    case Region::D1: return schedule.omega0 * std::exp(-schedule.alpha * tau);
    case Region::D2: return 0.0;
    case Region::D3: return schedule.omega0;
  }
  return 0.0;
}

ValidatedConfig validate_config(const Config& config) {
  const MediumConfig& m = config.medium;
  const ControlSchedule& s = config.schedule;
  const SolitonConfig& sol = config.soliton;

  if (!(m.nu0 > 0.0)) throw ValidationError("coupling constant nu0 must be positive");
  if (!(s.omega0 > 0.0)) throw ValidationError("background amplitude omega0 must be positive");
  if (!(s.alpha > 0.0)) throw ValidationError("decay constant must be positive");
  if (!(s.t1 > 0.0)) throw ValidationError("cut-off time t1 must be positive");
  if (!(s.t_revive >= s.t1)) throw ValidationError("revival time must not precede cut-off time");
  if (sol.lambda.imag() == 0.0) throw ValidationError("soliton amplitude zero (lambda is real)");
  if (sol.lambda == Complex(m.delta, 0.0))
    throw ValidationError("lambda coincides with the detuning");
  if (!std::isfinite(sol.lambda.real()) || !std::isfinite(sol.lambda.imag()))
    throw ValidationError("lambda must be finite");

  ValidatedConfig out;
  out.medium = m;
  out.schedule = s;
  out.lambda = sol.lambda;
  out.theta0 = sol.theta0;

  if (std::abs(m.nu0 - 0.5 * s.omega0 * s.omega0) > 1e-12 * std::max(1.0, m.nu0)) {
    std::ostringstream w;
    w << "nu0=" << m.nu0 << " differs from omega0^2/2=" << 0.5 * s.omega0 * s.omega0
      << "; the normalization of the dimensionless units assumes equality";
    out.warnings.push_back(w.str());
  }

  if (sol.phi0.has_value()) {
    out.phi0 = *sol.phi0;
  } else {
    // Center the soliton so that phi_s(zeta=0, tau=-2) = 0: the default
    // figure window then shows the approach, the stop and the revival.
    const Complex root = branched_root(sol.lambda, s.omega0);
    const Complex w0 = s.omega0 / (sol.lambda + root);
    const double re_z = std::real(Complex(0.0, 0.5) * s.omega0 * w0 * (-2.0));
    out.phi0 = -(re_z + 0.5 * std::log1p(std::norm(w0)));
  }
  return out;
}

Complex parse_complex(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ValidationError("empty complex literal");

  auto parse_real = [](const std::string& str, double& value, std::size_t& used) {
    const char* begin = str.c_str();
    char* end = nullptr;
    value = std::strtod(begin, &end);
    used = static_cast<std::size_t>(end - begin);
    return used != 0;
  };

  // pure imaginary unit forms
  if (t == "i" || t == "j" || t == "+i" || t == "+j") return {0.0, 1.0};
  if (t == "-i" || t == "-j") return {0.0, -1.0};

  double first = 0.0;
  std::size_t used = 0;
  if (!parse_real(t, first, used)) throw ValidationError("malformed complex literal: " + text);
  if (used == t.size()) return {first, 0.0};
  if (used == t.size() - 1 && (t[used] == 'i' || t[used] == 'j')) return {0.0, first};

  std::string rest = t.substr(used);
  if (rest == "+i" || rest == "+j") return {first, 1.0};
  if (rest == "-i" || rest == "-j") return {first, -1.0};
  double second = 0.0;
  std::size_t used2 = 0;
  if (!parse_real(rest, second, used2) || used2 != rest.size() - 1 ||
      !(rest.back() == 'i' || rest.back() == 'j'))
    throw ValidationError("malformed complex literal: " + text);
  return {first, second};
}

std::string format_complex(Complex value) {
  std::ostringstream out;
  out.precision(15);
  out << value.real();
  if (value.imag() >= 0.0 || std::isnan(value.imag())) out << "+";
  out << value.imag() << "i";
  return out.str();
}

Config parse_config(std::istream& in) {
  std::map<std::string, std::string> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string stripped;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ValidationError("config line " + std::to_string(lineno) + " is not key=value");
    const std::string key = stripped.substr(0, eq);
    const std::string value = stripped.substr(eq + 1);
    if (entries.count(key))
      throw ValidationError("duplicate config key '" + key + "'");
    entries[key] = value;
  }

  Config config;
  auto take = [&entries](const char* key) -> std::optional<std::string> {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    std::string v = it->second;
    entries.erase(it);
    return v;
  };
  auto real_of = [](const std::string& key, const std::string& v) {
    try {
      std::size_t used = 0;
      double d = std::stod(v, &used);
      if (used != v.size()) throw ValidationError("");
      return d;
    } catch (...) {
      throw ValidationError("config key '" + key + "' has malformed value '" + v + "'");
    }
  };

  bool have_t1 = false, have_revive = false;
  if (auto v = take("nu0")) config.medium.nu0 = real_of("nu0", *v); else config.defaulted_keys.push_back("nu0");
  if (auto v = take("delta")) config.medium.delta = real_of("delta", *v); else config.defaulted_keys.push_back("delta");
  if (auto v = take("omega0")) config.schedule.omega0 = real_of("omega0", *v); else config.defaulted_keys.push_back("omega0");
  if (auto v = take("alpha")) config.schedule.alpha = real_of("alpha", *v); else config.defaulted_keys.push_back("alpha");
  if (auto v = take("t1")) { config.schedule.t1 = real_of("t1", *v); have_t1 = true; } else config.defaulted_keys.push_back("t1");
  if (auto v = take("t_revive")) { config.schedule.t_revive = real_of("t_revive", *v); have_revive = true; } else config.defaulted_keys.push_back("t_revive");
  if (auto v = take("lambda")) config.soliton.lambda = parse_complex(*v); else config.defaulted_keys.push_back("lambda");
  if (auto v = take("phi0")) config.soliton.phi0 = real_of("phi0", *v); else config.defaulted_keys.push_back("phi0");
  if (auto v = take("theta0")) config.soliton.theta0 = real_of("theta0", *v); else config.defaulted_keys.push_back("theta0");

  if (!entries.empty())
    throw ValidationError("unknown config key '" + entries.begin()->first + "'");

  // derived defaults tied to alpha
  if (!have_t1) config.schedule.t1 = 4.0 / config.schedule.alpha;
  if (!have_revive) config.schedule.t_revive = config.schedule.t1 + 3.0;
  return config;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  return parse_config(in);
}

std::string render_config(const ValidatedConfig& config) {
  std::ostringstream out;
  out.precision(15);
  out << "nu0=" << config.medium.nu0 << "\n"
      << "delta=" << config.medium.delta << "\n"
      << "omega0=" << config.schedule.omega0 << "\n"
      << "alpha=" << config.schedule.alpha << "\n"
      << "t1=" << config.schedule.t1 << "\n"
      << "t_revive=" << config.schedule.t_revive << "\n"
      << "lambda=" << format_complex(config.lambda) << "\n"
      << "phi0=" << config.phi0 << "\n"
      << "theta0=" << config.theta0 << "\n";
  return out.str();
}

std::string config_hash(const ValidatedConfig& config) {
  const std::string text = render_config(config);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

}  // namespace slowlight
