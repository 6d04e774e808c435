// Command-line front end; talks to the core only through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "devsurf.h"

namespace {

constexpr int kExitPass = 0, kExitCheckFail = 1, kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const char* data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    std::exit(kExitUsage);
  }
}

struct Owned {
  char* s = nullptr;
  ~Owned() { ds_string_free(s); }
};

struct CurveHandle {
  ds_curve* c = nullptr;
  ~CurveHandle() { ds_curve_free(c); }
};

int check(ds_status st) {
  if (st == DS_OK) return kExitPass;
  std::cerr << "error: " << ds_last_error() << "\n";
  return kExitUsage;
}

bool parse_grid(const std::string& text, int* a, int* b) {
  return std::sscanf(text.c_str(), "%dx%d", a, b) == 2 && *a >= 2 && *b >= 2;
}

bool parse_range(const std::string& text, double* lo, double* hi) {
  return std::sscanf(text.c_str(), "%lf:%lf", lo, hi) == 2 && *lo < *hi;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"developable-surface toolkit"};
  app.require_subcommand(1);

  std::string spec_path, out_path, report_path, csv_path;
  std::string grid_text = "100x20", srange_text = "0.5:2";
  std::string section_a_path, section_b_path;
  int samples = 2000, ruling_stride = 25, nx = 20;
  double step = 1e-4, s_len = 1.5, gap = 1.0;
  double tol_isometry = 1e-6, tol_differential = 1e-5, tol_residual = 1e-9;
  std::uint64_t seed = 0x4519;

  auto* c_surface = app.add_subcommand("surface", "tangent-developable mesh (OBJ)");
  c_surface->add_option("-s,--spec", spec_path, "curve spec (JSON)")->required();
  c_surface->add_option("-o,--out", out_path, "output OBJ path")->required();
  c_surface->add_option("--grid", grid_text, "mesh resolution AxB (tau x s)");
  c_surface->add_option("--s-range", srange_text, "ruling parameter range lo:hi");

  auto* c_unfold = app.add_subcommand("unfold", "development (SVG, CSV, report)");
  c_unfold->add_option("-s,--spec", spec_path, "curve spec (JSON)")->required();
  c_unfold->add_option("-o,--out", out_path, "output SVG path");
  c_unfold->add_option("--csv", csv_path, "output CSV path");
  c_unfold->add_option("--report", report_path, "verification report (JSON)");
  c_unfold->add_option("--samples", samples, "directrix samples / triangles");
  std::string unfold_grid;
  c_unfold->add_option("--grid", unfold_grid,
                       "AxB: A directrix samples, B drawn rulings");
  c_unfold->add_option("--ruling-stride", ruling_stride, "draw a ruling every N samples");
  c_unfold->add_option("--s-len", s_len, "drawn ruling length");
  c_unfold->add_option("--step", step, "isometry probe step h");
  c_unfold->add_option("--seed", seed, "sampling seed");
  c_unfold->add_option("--tol-isometry", tol_isometry, "isometry tolerance");

  auto* c_sextet = app.add_subcommand("sextet", "flattening-frame condition report");
  c_sextet->add_option("-s,--spec", spec_path, "curve spec (JSON)")->required();
  c_sextet->add_option("--report", report_path, "report path (JSON)");
  c_sextet->add_option("--samples", samples, "profile samples")->default_val(4096);
  c_sextet->add_option("--step", step, "differential probe step h")->default_val(1e-3);
  c_sextet->add_option("--tol-differential", tol_differential,
                       "differential-consistency tolerance");

  auto* c_shadow = app.add_subcommand("shadow", "two-profile surface and class");
  c_shadow->add_option("--section-a", section_a_path, "section spec A (JSON)")->required();
  c_shadow->add_option("--section-b", section_b_path, "section spec B (JSON)")->required();
  c_shadow->add_option("--gap", gap, "axial distance between sections");
  c_shadow->add_option("-o,--out", out_path, "output OBJ path");
  c_shadow->add_option("--report", report_path, "classification report (JSON)");
  c_shadow->add_option("--nx", nx, "axial mesh columns");

  auto* c_implicit = app.add_subcommand("verify-implicit",
                                        "curvature check of the built-in example");
  std::string example = "e419";
  c_implicit->add_option("--example", example, "built-in example name");
  c_implicit->add_option("--samples", samples, "on-surface sample count")
      ->default_val(10000);
  c_implicit->add_option("--step", step, "finite-difference step h")->default_val(1e-3);
  c_implicit->add_option("--tol-residual", tol_residual, "substitution tolerance");
  c_implicit->add_option("--report", report_path, "report path (JSON)");

  auto* c_selftest = app.add_subcommand("selftest", "full acceptance suite");
  c_selftest->add_option("--seed", seed, "suite seed");
  c_selftest->add_option("--report", report_path, "report path (JSON)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_surface->parsed()) {
      int ntau, ns;
      double smin, smax;
      if (!parse_grid(grid_text, &ntau, &ns) || !parse_range(srange_text, &smin, &smax)) {
        std::cerr << "error: bad --grid or --s-range\n";
        return kExitUsage;
      }
      CurveHandle curve;
      if (int rc = check(ds_curve_from_json(read_file(spec_path).c_str(), &curve.c)))
        return rc;
      Owned obj;
      if (int rc = check(ds_surface_obj(curve.c, ntau, ns, smin, smax, &obj.s)))
        return rc;
      write_file(out_path, obj.s);
      return kExitPass;
    }

    if (c_unfold->parsed()) {
      if (!unfold_grid.empty()) {
        int a, b;
        if (!parse_grid(unfold_grid, &a, &b)) {
          std::cerr << "error: bad --grid\n";
          return kExitUsage;
        }
        samples = a;
        ruling_stride = std::max(1, a / b);
      }
      CurveHandle curve;
      if (int rc = check(ds_curve_from_json(read_file(spec_path).c_str(), &curve.c)))
        return rc;
      if (!out_path.empty()) {
        Owned svg;
        if (int rc = check(ds_unfold_svg(curve.c, samples, ruling_stride, s_len, &svg.s)))
          return rc;
        write_file(out_path, svg.s);
      }
      if (!csv_path.empty()) {
        Owned csv;
        if (int rc = check(ds_unfold_csv(curve.c, samples, &csv.s))) return rc;
        write_file(csv_path, csv.s);
      }
      Owned rep;
      int pass = 0;
      if (int rc = check(ds_unfold_report(curve.c, samples, step, tol_isometry, seed,
                                          &rep.s, &pass)))
        return rc;
      if (!report_path.empty()) write_file(report_path, rep.s);
      return pass ? kExitPass : kExitCheckFail;
    }

    if (c_sextet->parsed()) {
      CurveHandle curve;
      if (int rc = check(ds_curve_from_json(read_file(spec_path).c_str(), &curve.c)))
        return rc;
      Owned rep;
      int pass = 0;
      if (int rc = check(ds_sextet_report(curve.c, samples, step, tol_differential,
                                          &rep.s, &pass)))
        return rc;
      if (!report_path.empty())
        write_file(report_path, rep.s);
      else
        std::cout << rep.s;
      return pass ? kExitPass : kExitCheckFail;
    }

    if (c_shadow->parsed()) {
      const std::string a = read_file(section_a_path), b = read_file(section_b_path);
      if (!out_path.empty()) {
        Owned obj;
        if (int rc = check(ds_shadow_obj(a.c_str(), b.c_str(), gap, nx, &obj.s)))
          return rc;
        write_file(out_path, obj.s);
      }
      Owned cls;
      if (int rc = check(ds_shadow_classify(a.c_str(), b.c_str(), gap, &cls.s)))
        return rc;
      if (!report_path.empty())
        write_file(report_path, cls.s);
      else
        std::cout << cls.s;
      return kExitPass;
    }

    if (c_implicit->parsed()) {
      if (example != "e419") {
        std::cerr << "error: unknown example '" << example << "'\n";
        return kExitUsage;
      }
      Owned rep;
      int pass = 0;
      if (int rc = check(ds_verify_implicit(samples, step, tol_residual, &rep.s, &pass)))
        return rc;
      if (!report_path.empty())
        write_file(report_path, rep.s);
      else
        std::cout << rep.s;
      return pass ? kExitPass : kExitCheckFail;
    }

    if (c_selftest->parsed()) {
      Owned log, rep;
      int pass = 0;
      if (int rc = check(ds_selftest(seed, &log.s, &rep.s, &pass))) return rc;
      std::cout << log.s;
      if (!report_path.empty()) write_file(report_path, rep.s);
      return pass ? kExitPass : kExitCheckFail;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
