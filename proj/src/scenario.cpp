#include "slowlight/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "slowlight/errors.hpp"

namespace slowlight {

namespace {

std::string format(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

CheckResult order_check(const std::string& name, const ConvergenceReport& report,
                        double min_order) {
  CheckResult check;
  check.name = name;
  check.pass = report.conclusive && report.order_coarse >= min_order &&
               report.order_fine >= min_order;
  std::ostringstream detail;
  detail << "errors " << report.error_coarse << " -> " << report.error_mid << " -> "
         << report.error_fine;
  if (report.conclusive)
    detail << ", orders " << format(report.order_coarse) << ", " << format(report.order_fine);
  else
    detail << ", non-monotone (inconclusive)";
  check.detail = detail.str();
  return check;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass || c.informational; });
}

double cut_transient_length(const AnalyticSolution& solution, double floor) {
  const ValidatedConfig& config = solution.config();
  const Complex w_cut = solution.spectral().w(config.schedule.t1);
  const double leftover = 2.0 * std::abs(config.lambda.imag()) * std::abs(w_cut);
  if (leftover <= floor) return 0.0;
  return std::log(leftover / floor) / std::abs(config.lambda.imag());
}

std::string report_header(const ValidatedConfig& config, const GridSpec& spec) {
  std::ostringstream out;
  out << "# configuration (hash " << config_hash(config) << ")\n";
  std::istringstream lines(render_config(config));
  std::string line;
  while (std::getline(lines, line)) out << "#   " << line << "\n";
  for (const std::string& warning : config.warnings) out << "# WARN " << warning << "\n";
  out << "# grid: tau [" << spec.tau_min << ", " << spec.tau_max << "] step " << spec.tau_step
      << ", zeta [" << spec.zeta_min << ", " << spec.zeta_max << "] step " << spec.zeta_step
      << "\n";
  return out.str();
}

std::string report_text(const std::string& header, const VerifyReport& report) {
  std::ostringstream out;
  out << header;
  for (const CheckResult& check : report.checks) {
    const char* tag = check.informational ? "INFO" : (check.pass ? "PASS" : "FAIL");
    out << tag << "  " << check.name << ": " << check.detail << "\n";
  }
  out << (report.all_pass() ? "VERIFY PASS\n" : "VERIFY FAIL\n");
  return out.str();
}

VerifyReport run_verify(const ValidatedConfig& config, const VerifyOptions& options) {
  VerifyReport report;
  const AnalyticSolution solution(config);
  const ControlSchedule& schedule = config.schedule;
  const double t1 = schedule.t1;
  const double t_revive = schedule.t_revive;

  // 1-2: residual convergence of the sampled closed form
  {
    GridSpec d0_window{options.tau_min, -0.1, options.residual_step,
                       0.0, options.residual_zeta_max, options.residual_step};
    const ResidualConvergence d0 = residual_convergence(solution, d0_window);
    report.checks.push_back(order_check("residual order, field eq (initial region)", d0.field, 1.8));
    report.checks.push_back(order_check("residual order, atom eq (initial region)", d0.atom, 1.8));

    GridSpec full_window{options.tau_min, options.tau_max, options.residual_step,
                         0.0, options.residual_zeta_max, options.residual_step};
    const ResidualConvergence full = residual_convergence(solution, full_window);
    report.checks.push_back(order_check("residual order, field eq (full window)", full.field, 1.8));
    report.checks.push_back(order_check("residual order, atom eq (full window)", full.atom, 1.8));
  }

  // 3: pointwise state identities at random points
  {
    std::mt19937_64 rng(20260809);
    std::uniform_real_distribution<double> tau_dist(options.tau_min, options.tau_max);
    std::uniform_real_distribution<double> zeta_dist(0.0, options.zeta_max);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
      const double tau = tau_dist(rng), zeta = zeta_dist(rng);
      const Eigen::Vector3cd psi = solution.state(zeta, tau);
      const Eigen::Matrix3cd rho = psi * psi.adjoint();
      worst = std::max(worst, std::abs(psi.squaredNorm() - 1.0));
      worst = std::max(worst, std::abs(rho.trace().real() - 1.0));
      worst = std::max(worst, std::abs((rho * rho).trace().real() - 1.0));
    }
    report.checks.push_back({"state identities (|psi|^2, tr rho, tr rho^2)", worst <= 1e-12,
                             false, "max deviation " + format(worst) + " over 10^4 points"});
  }

  // 4: dark-state fixed point of the marching scheme
  {
    ProblemData dark;
    dark.boundary_fields = [&schedule](double tau) {
      return FieldState{{0.0, 0.0}, {background_field(tau, schedule), 0.0}};
    };
    dark.initial_state = [](double) { return Eigen::Vector3cd(1.0, 0.0, 0.0); };
    dark.boundary_jumps = {
        {t1, {{0.0, 0.0}, {-background_field(t1, schedule), 0.0}}},
        {t_revive, {{0.0, 0.0}, {schedule.omega0, 0.0}}}};
    GridSpec window{options.tau_min, options.tau_max, 0.0, 0.0, 2.0, 0.0};
    const GridSolution darkrun =
        integrate(dark, config.medium, window, {options.scheme.h_tau, 0.1, 1});
    double dev = 0.0;
    for (Eigen::Index i = 0; i < darkrun.n_tau(); ++i)
      for (Eigen::Index k = 0; k < darkrun.n_zeta(); ++k) {
        dev = std::max(dev, std::abs(darkrun.rho11(i, k) - 1.0));
        dev = std::max(dev, std::abs(darkrun.omega_a(i, k)));
        dev = std::max(dev, std::abs(darkrun.omega_b(i, k) -
                                     background_field(darkrun.tau[i], schedule)));
      }
    report.checks.push_back({"dark state stationary under background-only driving",
                             dev <= 1e-12, false, "max deviation " + format(dev)});
  }

  // single-pass run over the whole window (used by 5, 6, 7, 9, 10 and the
  // cut-discrepancy measurement)
  GridSpec window{options.tau_min, options.tau_max, options.scheme.h_tau,
                  0.0, options.zeta_max, options.scheme.h_zeta};
  const GridSolution numeric = integrate(solution, window, options.scheme);
  const GridSolution analytic = solution.evaluate(window);

  // 5: conservation drift
  {
    double trace_drift = 0.0, purity_drift = 0.0;
    for (Eigen::Index i = 0; i < numeric.n_tau(); ++i)
      for (Eigen::Index k = 0; k < numeric.n_zeta(); ++k) {
        const Eigen::Matrix3cd rho = numeric.density(i, k);
        trace_drift = std::max(trace_drift, std::abs(rho.trace().real() - 1.0));
        purity_drift = std::max(purity_drift, std::abs((rho * rho).trace().real() - 1.0));
      }
    report.checks.push_back({"trace and purity preserved while marching",
                             trace_drift <= 1e-9 && purity_drift <= 1e-9, false,
                             "trace drift " + format(trace_drift) + ", purity drift " +
                                 format(purity_drift)});
  }

  // 6-7: stored polarization peak stationary and near unity
  {
    const auto track = track_peak(numeric, Observable::Rho22);
    double zeta_lo = 1e300, zeta_hi = -1e300, min_peak = 1.0;
    int count = 0;
    for (const TrackSample& s : track)
      if (s.tau > t1 && s.tau <= t_revive) {
        zeta_lo = std::min(zeta_lo, s.zeta_peak);
        zeta_hi = std::max(zeta_hi, s.zeta_peak);
        min_peak = std::min(min_peak, s.value);
        ++count;
      }
    const double drift = count > 0 ? zeta_hi - zeta_lo : 1e300;
    report.checks.push_back({"stored peak stationary",
                             count > 0 && drift < options.scheme.h_zeta, false,
                             "drift " + format(drift) + " over " + std::to_string(count) +
                                 " rows (cell " + format(options.scheme.h_zeta) + ")"});
    report.checks.push_back({"stored peak amplitude", count > 0 && min_peak >= 0.99, false,
                             "min peak rho22 " + format(min_peak)});
  }

  // 8: velocities
  const double expected_slope = solution.levelset_slope();
  {
    const auto track = track_peak(numeric, Observable::FieldIntensity);
    const VelocityFit pre = estimate_velocity(track, options.tau_min + 1.0, -0.1);
    const VelocityFit post = estimate_velocity(track, t_revive + 2.0, options.tau_max - 0.5);
    auto window_of = [](const VelocityFit& fit) {
      return " on tau [" + format(fit.tau_lo) + ", " + format(fit.tau_hi) + "]";
    };
    report.checks.push_back(
        {"track velocity matches the level-set slope",
         std::abs(pre.slope / expected_slope - 1.0) < 0.01, false,
         "measured " + format(pre.slope) + window_of(pre) + ", level set " +
             format(expected_slope)});
    report.checks.push_back(
        {"revived velocity matches the pre-stop velocity",
         std::abs(post.slope / pre.slope - 1.0) < 0.01, false,
         "pre " + format(pre.slope) + window_of(pre) + ", post " + format(post.slope) +
             window_of(post)});
  }

  // 9: segmented numeric-analytic comparison (data consistent on each side
  // of the tail cut)
  {
    GridSpec seg1 = window;
    seg1.tau_max = t1;
    const GridSolution n1 = integrate(solution, seg1, options.scheme);
    const GridSolution a1 = solution.evaluate(
        GridSpec{seg1.tau_min, seg1.tau_max, options.scheme.h_tau, seg1.zeta_min, seg1.zeta_max,
                 options.scheme.h_zeta});
    const ComparisonNorms c1 =
        compare(n1, a1, schedule, t1 - 3.5 * options.scheme.h_tau, t1 + 1.0);
    report.checks.push_back({"cross validation before the cut (field Linf)",
                             c1.field_linf <= 1e-3, false,
                             "Linf " + format(c1.field_linf) + ", rms " + format(c1.field_l2)});

    GridSpec seg2 = window;
    seg2.tau_min = t1;
    const GridSolution n2 = integrate(solution, seg2, options.scheme);
    const GridSolution a2 = solution.evaluate(GridSpec{
        seg2.tau_min, seg2.tau_max, options.scheme.h_tau, seg2.zeta_min, seg2.zeta_max,
        options.scheme.h_zeta});
    const ComparisonNorms c2 =
        compare(n2, a2, schedule, t1 - 1.0, t1 + 3.5 * options.scheme.h_tau);
    report.checks.push_back({"cross validation after the cut (field Linf)",
                             c2.field_linf <= 1e-3, false,
                             "Linf " + format(c2.field_linf) + ", rms " + format(c2.field_l2)});

    // stored phase of the re-anchored run carries no field trail
    double trail = 0.0;
    for (Eigen::Index i = 0; i < n2.n_tau(); ++i)
      if (n2.tau[i] > t1 && n2.tau[i] <= t_revive)
        trail = std::max(trail, n2.omega_a.row(i).abs2().maxCoeff());
    report.checks.push_back({"no field trail in the stored phase", trail < 1e-6, false,
                             "max |Omega_a|^2 " + format(trail)});
  }

  // 10: cut-induced discrepancy of the idealized piecewise solution,
  // measured on the single-pass run (reported, not gated)
  {
    const double transient = cut_transient_length(solution);
    const ComparisonNorms norms = compare(numeric, analytic, schedule,
                                          t1 - 3.5 * options.scheme.h_tau, t1 + transient);
    std::ostringstream detail;
    detail << "single-pass field Linf " << norms.field_linf << " outside the cut window [t1, t1+"
           << format(transient) << "]; inside it " << norms.excluded_field_linf
           << "; per region D0 " << norms.field_linf_by_region[0] << ", D1 "
           << norms.field_linf_by_region[1] << ", D2 " << norms.field_linf_by_region[2]
           << ", D3 " << norms.field_linf_by_region[3];
    report.checks.push_back({"cut-induced discrepancy (idealized stored phase)", true, true,
                             detail.str()});
  }

  return report;
}

}  // namespace slowlight
