#include "slowlight/export.hpp"

#include <cinttypes>
#include <cstdio>
#include <memory>

#include "slowlight/errors.hpp"

namespace slowlight {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_for_write(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "w"));
  if (!f) throw IoError("cannot open for writing: " + path);
  return f;
}

void check(int rc, const std::string& path) {
  if (rc < 0) throw IoError("write failed: " + path);
}

}  // namespace

void export_table(const GridSolution& g, const std::string& path, TableKind kind) {
  if (kind == TableKind::Track)
    throw IoError("export_table: a grid cannot be exported as a track");
  FilePtr f = open_for_write(path);
  if (kind == TableKind::Fields)
    check(std::fprintf(f.get(),
                       "tau,zeta,re_omega_a,im_omega_a,re_omega_b,im_omega_b,"
                       "rho11,rho22,rho33\n"),
          path);
  else
    check(std::fprintf(f.get(), "tau,zeta,rho11,rho22,rho33\n"), path);

  for (Eigen::Index i = 0; i < g.n_tau(); ++i) {
    for (Eigen::Index k = 0; k < g.n_zeta(); ++k) {
      if (kind == TableKind::Fields)
        check(std::fprintf(f.get(),
                           "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                           g.tau[i], g.zeta[k], g.omega_a(i, k).real(), g.omega_a(i, k).imag(),
                           g.omega_b(i, k).real(), g.omega_b(i, k).imag(), g.rho11(i, k),
                           g.rho22(i, k), g.rho33(i, k)),
              path);
      else
        check(std::fprintf(f.get(), "%.17g,%.17g,%.17g,%.17g,%.17g\n", g.tau[i], g.zeta[k],
                           g.rho11(i, k), g.rho22(i, k), g.rho33(i, k)),
              path);
    }
  }
}

void export_table(const std::vector<TrackSample>& track, const std::string& path) {
  FilePtr f = open_for_write(path);
  check(std::fprintf(f.get(), "tau,zeta_peak,value\n"), path);
  for (const TrackSample& s : track)
    check(std::fprintf(f.get(), "%.17g,%.17g,%.17g\n", s.tau, s.zeta_peak, s.value), path);
}

void export_schedule(const ControlSchedule& schedule, double tau_min, double tau_max,
                     double tau_step, const std::string& path) {
  const Eigen::ArrayXd axis = make_axis(tau_min, tau_max, tau_step, "tau");
  FilePtr f = open_for_write(path);
  check(std::fprintf(f.get(), "tau,omega\n"), path);
  for (Eigen::Index i = 0; i < axis.size(); ++i)
    check(std::fprintf(f.get(), "%.17g,%.17g\n", axis[i], background_field(axis[i], schedule)),
          path);
}

void emit_plot_script(const std::string& data_csv, Figure figure, const std::string& path) {
  FilePtr f = open_for_write(path);
  const char* header =
      "set datafile separator ','\n"
      "set key off\n";
  switch (figure) {
    case Figure::Fig1:
      check(std::fprintf(f.get(),
                         "%s"
                         "set xlabel 'tau'\n"
                         "set ylabel 'Omega(tau)'\n"
                         "plot '%s' skip 1 using 1:2 with lines lw 2\n",
                         header, data_csv.c_str()),
            path);
      break;
    case Figure::Fig2:
      check(std::fprintf(f.get(),
                         "%s"
                         "set xlabel 'tau'\n"
                         "set ylabel 'zeta'\n"
                         "set cblabel '|Omega_a|^2'\n"
                         "plot '%s' skip 1 using 1:2:($3*$3+$4*$4) with image\n",
                         header, data_csv.c_str()),
            path);
      break;
    case Figure::Fig3:
      check(std::fprintf(f.get(),
                         "%s"
                         "set xlabel 'tau'\n"
                         "set ylabel 'zeta'\n"
                         "set cblabel 'rho22'\n"
                         "set cbrange [0:1]\n"
                         "plot '%s' skip 1 using 1:2:8 with image\n",
                         header, data_csv.c_str()),
            path);
      break;
    default:
      throw ValidationError("emit_plot_script: unknown figure tag");
  }
}

}  // namespace slowlight
