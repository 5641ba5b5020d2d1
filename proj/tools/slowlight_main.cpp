// slowlight: write, store and read an optical memory bit carried by a
// slow-light soliton in a three-level medium, from the closed-form solution
// or by direct numerical integration of the evolution equations.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "slowlight/analytic.hpp"
#include "slowlight/errors.hpp"
#include "slowlight/export.hpp"
#include "slowlight/integrator.hpp"
#include "slowlight/scenario.hpp"
#include "slowlight/special_functions.hpp"
#include "slowlight/tracking.hpp"

namespace fs = std::filesystem;
using namespace slowlight;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = ".";
  double tau_min = -3.0;
  double tau_max = 8.0;
  double tau_step = 0.01;
  double zeta_max = 12.0;
  double zeta_step = 0.02;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "parameter file (key=value lines)");
  cmd->add_option("--out", args.out_dir, "output directory");
  cmd->add_option("--tau-min", args.tau_min, "window start in retarded time");
  cmd->add_option("--tau-max", args.tau_max, "window end in retarded time");
  cmd->add_option("--tau-step", args.tau_step, "retarded-time step");
  cmd->add_option("--zeta-max", args.zeta_max, "window depth in space (starts at 0)");
  cmd->add_option("--zeta-step", args.zeta_step, "space step");
}

ValidatedConfig load(const CommonArgs& args) {
  Config config;
  if (!args.config_path.empty()) config = load_config(args.config_path);
  ValidatedConfig validated = validate_config(config);
  for (const std::string& key : config.defaulted_keys)
    std::cerr << "WARN: config key '" << key << "' not given, using default\n";
  for (const std::string& warning : validated.warnings)
    std::cerr << "WARN: " << warning << "\n";
  return validated;
}

GridSpec window_of(const CommonArgs& args) {
  return {args.tau_min, args.tau_max, args.tau_step, 0.0, args.zeta_max, args.zeta_step};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << text;
}

void emit_figures(const ValidatedConfig& config, const CommonArgs& args,
                  const std::string& grid_csv, const std::string& figure) {
  const fs::path dir(args.out_dir);
  const std::string schedule_csv = (dir / "schedule.csv").string();
  if (figure.empty() || figure == "fig1") {
    export_schedule(config.schedule, args.tau_min, args.tau_max, args.tau_step, schedule_csv);
    emit_plot_script(schedule_csv, Figure::Fig1, (dir / "fig1.gp").string());
  }
  if (figure.empty() || figure == "fig2")
    emit_plot_script(grid_csv, Figure::Fig2, (dir / "fig2.gp").string());
  if (figure.empty() || figure == "fig3")
    emit_plot_script(grid_csv, Figure::Fig3, (dir / "fig3.gp").string());
}

int run_analytic(const CommonArgs& args, const std::string& figure) {
  const ValidatedConfig config = load(args);
  const AnalyticSolution solution(config);
  const GridSpec spec = window_of(args);
  const GridSolution grid = solution.evaluate(spec);

  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  const std::string grid_csv = (dir / "analytic_grid.csv").string();
  export_table(grid, grid_csv, TableKind::Fields);
  export_table(grid, (dir / "analytic_populations.csv").string(), TableKind::Populations);
  emit_figures(config, args, grid_csv, figure);

  std::ostringstream report;
  report << report_header(config, spec);
  report << "peak |Omega_a| at the soliton center: "
         << 2.0 * std::abs(config.lambda.imag()) * std::abs(solution.spectral().w0()) /
                std::sqrt(1.0 + std::norm(solution.spectral().w0()))
         << "\n";
  report << "level-set velocity d(zeta)/d(tau): " << solution.levelset_slope() << "\n";
  report << "soliton center at tau=" << args.tau_min << ": "
         << solution.soliton_center(args.tau_min) << "\n";
  write_text(dir / "analytic_report.txt", report.str());
  std::cout << report.str();
  return 0;
}

int run_simulate(const CommonArgs& args, int correctors) {
  const ValidatedConfig config = load(args);
  const AnalyticSolution solution(config);
  GridSpec spec = window_of(args);
  const SchemeConfig scheme{args.tau_step, args.zeta_step, correctors};
  const GridSolution grid = integrate(solution, spec, scheme);

  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  const std::string grid_csv = (dir / "numeric_grid.csv").string();
  export_table(grid, grid_csv, TableKind::Fields);
  export_table(grid, (dir / "numeric_populations.csv").string(), TableKind::Populations);

  const GridSolution analytic = solution.evaluate(spec);
  const double transient = cut_transient_length(solution);
  const ComparisonNorms norms = compare(grid, analytic, config.schedule,
                                        config.schedule.t1 - 3.5 * args.tau_step,
                                        config.schedule.t1 + transient);
  std::ostringstream report;
  report << report_header(config, spec);
  report << "numeric vs analytic field Linf (outside the cut window): " << norms.field_linf
         << "\n";
  report << "cut window [t1, t1+" << transient << "] field Linf: " << norms.excluded_field_linf
         << "\n";
  report << "population Linf: " << norms.population_linf << "\n";
  write_text(dir / "simulate_report.txt", report.str());
  std::cout << report.str();
  return 0;
}

int run_verify(const CommonArgs& args, int correctors) {
  const ValidatedConfig config = load(args);
  VerifyOptions options;
  options.scheme = {args.tau_step, args.zeta_step, correctors};
  options.tau_min = args.tau_min;
  options.tau_max = args.tau_max;
  options.zeta_max = args.zeta_max;
  const VerifyReport report = slowlight::run_verify(config, options);
  const std::string text = report_text(report_header(config, window_of(args)), report);
  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  write_text(dir / "verify_report.txt", text);
  std::cout << text;
  return report.all_pass() ? 0 : 2;
}

int run_track(const CommonArgs& args, const std::string& observable) {
  const ValidatedConfig config = load(args);
  const AnalyticSolution solution(config);
  const GridSpec spec = window_of(args);
  const GridSolution grid = solution.evaluate(spec);
  const Observable what =
      observable == "rho22" ? Observable::Rho22 : Observable::FieldIntensity;
  const auto track = track_peak(grid, what);

  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  export_table(track, (dir / "track.csv").string());

  std::ostringstream report;
  report << report_header(config, spec);
  report << "track rows: " << track.size() << " (observable "
         << (what == Observable::Rho22 ? "rho22" : "|Omega_a|^2") << ")\n";
  if (!track.empty()) {
    try {
      const VelocityFit fit = estimate_velocity(track, args.tau_min, 0.0);
      report << "initial-region velocity: " << fit.slope << " (fit on [" << fit.tau_lo << ", "
             << fit.tau_hi << "], rms residual " << fit.rms_residual << ", "
             << fit.samples << " samples)\n";
      report << "level-set velocity: " << solution.levelset_slope() << "\n";
    } catch (const ValidationError&) {
      report << "too few samples before tau=0 for a velocity fit\n";
    }
  }
  write_text(dir / "track_report.txt", report.str());
  std::cout << report.str();
  return 0;
}

int run_bessel(const CommonArgs& args) {
  const ValidatedConfig config = load(args);
  const AnalyticSolution solution(config);
  const SpectralData& sd = solution.spectral();
  const Complex gamma = sd.gamma_index();
  const double x0 = -config.schedule.omega0 / (2.0 * config.schedule.alpha);

  std::cout.precision(15);
  std::cout << "gamma index        = " << gamma << "\n";
  std::cout << "x0                 = " << x0 << "\n";
  for (const Complex nu : {gamma, -gamma, gamma - 1.0, 1.0 - gamma})
    std::cout << "J_(" << nu << ")(" << x0 << ") = " << bessel_j(nu, Complex(x0, 0.0)) << "\n";
  std::cout << "J_0(1)             = " << bessel_j(Complex(0, 0), Complex(1, 0)) << "\n";
  std::cout << "J_1/2(pi/2)        = "
            << bessel_j(Complex(0.5, 0.0), Complex(1.57079632679489662, 0.0))
            << "  (2/pi = 0.636619772367581)\n";
  std::cout << "1/Gamma(1-gamma)   = " << gamma_reciprocal(1.0 - gamma) << "\n";
  std::cout << "1/Gamma(1+i)       = " << gamma_reciprocal(Complex(1, 1)) << "\n";
  std::cout << "branch root s      = " << sd.s() << "\n";
  std::cout << "w0                 = " << sd.w0() << "\n";
  std::cout << "stored-phase z2    = " << sd.z2() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slow-light soliton memory: closed-form evaluation and cross-validation"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string figure;
  std::string observable = "fields";
  int correctors = 1;

  CLI::App* analytic = app.add_subcommand("analytic", "sample the closed-form solution");
  add_common(analytic, args);
  analytic->add_option("--figure", figure, "emit only one plot script (fig1|fig2|fig3)")
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));

  CLI::App* simulate = app.add_subcommand("simulate", "march the evolution equations");
  add_common(simulate, args);
  simulate->add_option("--correctors", correctors, "corrector iterations of the space step");

  CLI::App* verify = app.add_subcommand("verify", "run the cross-validation battery");
  add_common(verify, args);
  verify->add_option("--correctors", correctors, "corrector iterations of the space step");

  CLI::App* track = app.add_subcommand("track", "track the moving peak and fit velocities");
  add_common(track, args);
  track->add_option("--observable", observable, "peak observable")
      ->check(CLI::IsMember({"fields", "rho22"}));

  CLI::App* bessel = app.add_subcommand("bessel", "special-function spot checks");
  add_common(bessel, args);

  // simulate defaults to the cross-validation step sizes
  simulate->parse_complete_callback([&]() {
    if (simulate->count("--tau-step") == 0) args.tau_step = 0.005;
    if (simulate->count("--zeta-step") == 0) args.zeta_step = 0.05;
    if (simulate->count("--zeta-max") == 0) args.zeta_max = 8.0;
  });
  verify->parse_complete_callback([&]() {
    if (verify->count("--tau-step") == 0) args.tau_step = 0.005;
    if (verify->count("--zeta-step") == 0) args.zeta_step = 0.05;
    if (verify->count("--zeta-max") == 0) args.zeta_max = 8.0;
  });

  try {
    app.parse(argc, argv);
    if (analytic->parsed()) return run_analytic(args, figure);
    if (simulate->parsed()) return run_simulate(args, correctors);
    if (verify->parsed()) return run_verify(args, correctors);
    if (track->parsed()) return run_track(args, observable);
    if (bessel->parsed()) return run_bessel(args);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}
