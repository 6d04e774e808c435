#include "devsurf.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "devsurf/curve.hpp"
#include "devsurf/curve_field.hpp"
#include "devsurf/development.hpp"
#include "devsurf/frame_sextet.hpp"
#include "devsurf/geom_io.hpp"
#include "devsurf/selftest.hpp"
#include "devsurf/shadow.hpp"
#include "devsurf/tangent_dev.hpp"
#include "devsurf/verify.hpp"

using namespace devsurf;

struct ds_curve {
  CurveSpec spec;
};

namespace {

thread_local std::string g_error = "no error";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
ds_status guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    g_error = e.what();
    return DS_ERR_PARSE;
  } catch (const DomainError& e) {
    g_error = e.what();
    return DS_ERR_DOMAIN;
  } catch (const SingularError& e) {
    g_error = e.what();
    return DS_ERR_SINGULAR;
  } catch (const IoError& e) {
    g_error = e.what();
    return DS_ERR_IO;
  } catch (const std::exception& e) {
    g_error = e.what();
    return DS_ERR_INTERNAL;
  }
}

ds_status invalid(const char* what) {
  g_error = what;
  return DS_ERR_INVALID;
}

struct Tabulated {
  DirectrixCurve curve;
  AngleProfile prof;  // omega filled
};

Tabulated tabulate(const CurveSpec& base, int samples) {
  CurveSpec spec = base;
  if (samples > 0 && spec.family != CurveFamily::Sampled) spec.samples = samples;
  Tabulated out;
  if (spec.family == CurveFamily::Angles) {
    const int n = spec.samples;
    std::vector<double> t(n), z(n), th(n);
    const double dt = (spec.tau1 - spec.tau0) / (n - 1);
    for (int i = 0; i < n; ++i) {
      t[i] = spec.tau0 + i * dt;
      const std::map<std::string, double> env = {{"t", t[i]}};
      z[i] = expr::eval(spec.ex_zeta, env);
      th[i] = expr::eval(spec.ex_theta, env);
    }
    out.curve = curve_from_angles(t, z, th);
    out.prof.tau = t;
    out.prof.zeta = z;
    out.prof.theta = th;
  } else {
    out.curve = sample_curve(spec);
    out.prof = angles_from_curve(out.curve);
  }
  out.prof = omega_profile(out.prof);
  return out;
}

}  // namespace

extern "C" {

const char* ds_last_error(void) { return g_error.c_str(); }

void ds_string_free(char* s) { std::free(s); }

ds_status ds_curve_from_json(const char* json, ds_curve** out) {
  if (!json || !out) return invalid("ds_curve_from_json: null argument");
  return guarded([&] {
    auto handle = new ds_curve{parse_curve_spec(json)};
    *out = handle;
    return DS_OK;
  });
}

void ds_curve_free(ds_curve* curve) { delete curve; }

ds_status ds_surface_obj(const ds_curve* curve, int ntau, int ns, double smin,
                         double smax, char** out_obj) {
  if (!curve || !out_obj) return invalid("ds_surface_obj: null argument");
  return guarded([&] {
    const Tabulated tab = tabulate(curve->spec, 0);
    const SurfaceMesh grid = surface_grid(tab.curve, tab.prof, tab.curve.tau.front(),
                                          tab.curve.tau.back(), smin, smax, ntau, ns);
    *out_obj = dup_string(export_obj(mesh_from_grid(grid)));
    return DS_OK;
  });
}

ds_status ds_unfold_svg(const ds_curve* curve, int samples, int ruling_stride,
                        double s_len, char** out_svg) {
  if (!curve || !out_svg) return invalid("ds_unfold_svg: null argument");
  if (ruling_stride < 1) return invalid("ds_unfold_svg: ruling_stride must be >= 1");
  return guarded([&] {
    const Tabulated tab = tabulate(curve->spec, samples);
    const DevelopedDirectrix flat = plane_directrix(tab.curve, tab.prof);
    Flat2Doc doc;
    for (std::size_t i = 0; i < flat.size(); ++i)
      doc.directrix.push_back({flat.pd[i], flat.qd[i]});
    for (std::size_t i = 0; i < flat.size(); i += ruling_stride)
      doc.rulings.push_back(
          {Vec2{flat.pd[i], flat.qd[i]}, develop_point(flat, flat.tau[i], s_len)});
    *out_svg = dup_string(export_svg(doc));
    return DS_OK;
  });
}

ds_status ds_unfold_csv(const ds_curve* curve, int samples, char** out_csv) {
  if (!curve || !out_csv) return invalid("ds_unfold_csv: null argument");
  return guarded([&] {
    const Tabulated tab = tabulate(curve->spec, samples);
    const DevelopedDirectrix flat = plane_directrix(tab.curve, tab.prof);
    const Table table{{"tau", "zeta", "theta", "omega", "pd", "qd", "sigma"},
                      {tab.prof.tau, tab.prof.zeta, tab.prof.theta, flat.omega, flat.pd,
                       flat.qd, flat.sigma}};
    *out_csv = dup_string(export_csv(table));
    return DS_OK;
  });
}

ds_status ds_unfold_report(const ds_curve* curve, int samples, double h,
                           double tolerance, uint64_t seed, char** out_json,
                           int* out_pass) {
  if (!curve || !out_json || !out_pass)
    return invalid("ds_unfold_report: null argument");
  return guarded([&] {
    std::shared_ptr<const CurveField> field = make_curve_field(curve->spec);
    DevelopmentField dev(field);
    VerificationReport rep;
    rep.add(isometry_triangle_check(
        [&](double tau, double s) { return dev.surface3(tau, s); },
        [&](double tau, double s) { return dev.develop(tau, s); },
        Domain2{field->tau0(), field->tau1(), 0.5, 2.0}, samples, h, tolerance, seed));
    *out_pass = rep.all_pass() ? 1 : 0;
    *out_json = dup_string(rep.to_json().dump(2) + "\n");
    return DS_OK;
  });
}

ds_status ds_sextet_report(const ds_curve* curve, int samples, double h,
                           double tolerance, char** out_json, int* out_pass) {
  if (!curve || !out_json || !out_pass)
    return invalid("ds_sextet_report: null argument");
  return guarded([&] {
    const Tabulated tab = tabulate(curve->spec, samples);
    const FrameSextet sx = sextet(tab.prof);
    std::shared_ptr<const CurveField> field = make_curve_field(curve->spec);
    DevelopmentField dev(field);
    const ConditionReport cond = check_conditions(sx, dev, h);
    const TangentRelationReport rel = check_tangent_relation(sx);

    VerificationReport rep;
    auto algebraic = [&](const char* name, double value) {
      CheckEntry e;
      e.check = name;
      e.tolerance = 1e-12;
      e.max_residual = value;
      e.samples = static_cast<long>(sx.size());
      e.pass = value <= e.tolerance;
      rep.add(e);
    };
    algebraic("sextet_unit_latin", cond.residual_iv);
    algebraic("sextet_unit_greek", cond.residual_v);
    algebraic("sextet_orthogonality", cond.residual_vi);

    CheckEntry d;
    d.check = "sextet_differential";
    d.tolerance = tolerance;
    d.max_residual = cond.residual_differential;
    d.argmax = {cond.argmax_tau, 0};
    d.samples = cond.samples_checked;
    d.pass = cond.residual_differential <= tolerance;
    rep.add(d);

    CheckEntry r;
    r.check = "tangent_rotation";
    r.tolerance = 1e-5;
    r.max_residual = rel.max_residual;
    r.argmax = {rel.argmax_tau, 0};
    r.samples = rel.samples_used;
    r.pass = !rel.degenerate && rel.max_residual <= r.tolerance;
    rep.add(r);

    *out_pass = rep.all_pass() ? 1 : 0;
    *out_json = dup_string(rep.to_json().dump(2) + "\n");
    return DS_OK;
  });
}

ds_status ds_shadow_obj(const char* section_a_json, const char* section_b_json,
                        double gap, int nx, char** out_obj) {
  if (!section_a_json || !section_b_json || !out_obj)
    return invalid("ds_shadow_obj: null argument");
  if (nx < 2) return invalid("ds_shadow_obj: nx must be >= 2");
  return guarded([&] {
    const ShadowSection a = parse_section_spec(section_a_json);
    const ShadowSection b = parse_section_spec(section_b_json);
    Mesh3Doc doc;
    const int nphi = static_cast<int>(a.phi.size());
    for (int i = 0; i < nphi; ++i) {
      for (int j = 0; j < nx; ++j) {
        const double x = gap * j / (nx - 1);
        doc.vertices.push_back(shadow_point(a, b, gap, a.phi[i], x));
        doc.provenance.push_back({a.phi[i], x});
      }
    }
    for (int i = 0; i + 1 < nphi; ++i) {
      for (int j = 0; j + 1 < nx; ++j) {
        const int v = i * nx + j + 1;
        doc.faces.push_back({v, v + nx, v + nx + 1, v + 1});
      }
    }
    *out_obj = dup_string(export_obj(doc));
    return DS_OK;
  });
}

ds_status ds_shadow_classify(const char* section_a_json, const char* section_b_json,
                             double gap, char** out_json) {
  if (!section_a_json || !section_b_json || !out_json)
    return invalid("ds_shadow_classify: null argument");
  return guarded([&] {
    const ShadowSection a = parse_section_spec(section_a_json);
    const ShadowSection b = parse_section_spec(section_b_json);
    const Classification c = classify_ruling_family(a, b, gap);
    nlohmann::json j = {
        {"kind", c.kind == RulingClass::Cylinder
                     ? "cylinder"
                     : c.kind == RulingClass::Cone ? "cone" : "general"},
        {"apex", {c.apex.x, c.apex.y, c.apex.z}},
        {"angular_spread", c.angular_spread},
        {"apex_rms", c.apex_rms}};
    *out_json = dup_string(j.dump(2) + "\n");
    return DS_OK;
  });
}

ds_status ds_verify_implicit(int samples, double h, double tolerance,
                             char** out_json, int* out_pass) {
  if (!out_json || !out_pass) return invalid("ds_verify_implicit: null argument");
  if (samples < 4) return invalid("ds_verify_implicit: samples must be >= 4");
  return guarded([&] {
    VerificationReport rep;

    CheckEntry res;
    res.check = "implicit_residual";
    res.tolerance = tolerance;
    const int m = 100;
    res.samples = static_cast<long>(m) * m;
    for (int i = 0; i < m; ++i) {
      const double phi = -2 + 4.0 * i / (m - 1);
      for (int j = 0; j < m; ++j) {
        const double x = -2 + 4.0 * j / (m - 1);
        const double r = std::abs(e419_residual_scaled(phi, x));
        if (r > res.max_residual) {
          res.max_residual = r;
          res.argmax = {phi, x};
        }
      }
    }
    res.pass = res.max_residual <= res.tolerance;
    rep.add(res);

    const int g = std::max(2, static_cast<int>(std::sqrt(double(samples))));
    std::vector<Vec3> points;
    for (int i = 0; i < g; ++i) {
      const double phi = 0.2 + 0.8 * i / (g - 1);
      for (int j = 0; j < g; ++j) {
        const double x = 0.2 + 0.8 * j / (g - 1);
        points.push_back({x, 2 * phi + 3 * phi * phi * x,
                          phi * phi + 2 * phi * phi * phi * x});
      }
    }
    auto F = [](Vec3 p) {
      return -4 * p.x * p.y * p.y * p.y - p.y * p.y + 18 * p.x * p.y * p.z +
             27 * p.x * p.x * p.z * p.z + 4 * p.z;
    };
    rep.add(implicit_developability_check(F, points, h, 1e-5));

    *out_pass = rep.all_pass() ? 1 : 0;
    *out_json = dup_string(rep.to_json().dump(2) + "\n");
    return DS_OK;
  });
}

ds_status ds_selftest(uint64_t seed, char** out_log, char** out_json, int* out_pass) {
  if (!out_pass) return invalid("ds_selftest: null argument");
  return guarded([&] {
    std::ostringstream log;
    const VerificationReport rep = run_selftest(seed, &log);
    *out_pass = rep.all_pass() ? 1 : 0;
    if (out_log) *out_log = dup_string(log.str());
    if (out_json) *out_json = dup_string(rep.to_json().dump(2) + "\n");
    return DS_OK;
  });
}

}  // extern "C"
