#pragma once

#include <string>
#include <vector>

#include "slowlight/analytic.hpp"
#include "slowlight/config.hpp"
#include "slowlight/grid.hpp"
#include "slowlight/integrator.hpp"
#include "slowlight/tracking.hpp"

namespace slowlight {

/// One verification check with its measured numbers.
struct CheckResult {
  std::string name;
  bool pass = false;
  bool informational = false; ///< reported, not gating
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Cross-validation battery: residual orders of the closed-form solution,
/// state identities, dark-state fixed point, conservation drift, storage
/// metrics, velocities and segmented numeric-analytic comparison. The
/// cut-induced discrepancy of the idealized stored phase is measured on a
/// full single-pass run and reported.
struct VerifyOptions {
  SchemeConfig scheme;          ///< steps for the comparison runs
  double zeta_max = 8.0;
  double tau_min = -3.0;
  double tau_max = 8.0;
  double residual_step = 0.04;  ///< coarsest residual grid step (both axes)
  double residual_zeta_max = 2.0;
};

VerifyReport run_verify(const ValidatedConfig& config, const VerifyOptions& options);

/// Length of the window after the tail cut-off in which the discarded
/// leftover field rings down: the leftover amplitude |2 Im lambda| |w(t1)|
/// decays at rate |Im lambda| until it reaches `floor`.
double cut_transient_length(const AnalyticSolution& solution, double floor = 1e-4);

/// Report header with config echo, hash and the grid window, shared by all
/// subcommands.
std::string report_header(const ValidatedConfig& config, const GridSpec& spec);

std::string report_text(const std::string& header, const VerifyReport& report);

}  // namespace slowlight
