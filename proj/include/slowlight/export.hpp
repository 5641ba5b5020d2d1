#pragma once

#include <string>
#include <vector>

#include "slowlight/config.hpp"
#include "slowlight/grid.hpp"
#include "slowlight/tracking.hpp"

namespace slowlight {

enum class TableKind { Fields, Populations, Track };

/// Writes a long-format CSV (tau-major row order, >= 12 significant digits):
///   fields:      tau,zeta,re_omega_a,im_omega_a,re_omega_b,im_omega_b,rho11,rho22,rho33
///   populations: tau,zeta,rho11,rho22,rho33
void export_table(const GridSolution& solution, const std::string& path, TableKind kind);

/// Track CSV: tau,zeta_peak,value.
void export_table(const std::vector<TrackSample>& track, const std::string& path);

/// Background schedule CSV: tau,omega.
void export_schedule(const ControlSchedule& schedule, double tau_min, double tau_max,
                     double tau_step, const std::string& path);

enum class Figure { Fig1, Fig2, Fig3 };

/// Emits a gnuplot script: fig1 draws the control schedule from a schedule
/// CSV, fig2 the |Omega_a|^2 heat map and fig3 the rho22 heat map from a
/// fields CSV.
void emit_plot_script(const std::string& data_csv, Figure figure, const std::string& path);

}  // namespace slowlight
