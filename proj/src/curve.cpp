#include "devsurf/curve.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace devsurf {

namespace {

using nlohmann::json;

expr::AstPtr parse_member_expr(const json& params, const char* key, const char* var) {
  if (!params.contains(key) || !params[key].is_string())
    throw ParseError(std::string("curve spec: params.") + key +
                     " must be an expression string");
  try {
    return expr::parse(params[key].get<std::string>(), {var});
  } catch (const ParseError& e) {
    throw ParseError(std::string("curve spec: params.") + key + ": " + e.what());
  }
}

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw ParseError(std::string("curve spec: missing numeric key '") + key + "'");
  return j[key].get<double>();
}

}  // namespace

CurveSpec parse_curve_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("curve spec: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("curve spec: top level must be an object");
  if (!doc.contains("family") || !doc["family"].is_string())
    throw ParseError("curve spec: missing string key 'family'");

  CurveSpec spec;
  const std::string fam = doc["family"].get<std::string>();
  if (fam == "helix")
    spec.family = CurveFamily::Helix;
  else if (fam == "expressions")
    spec.family = CurveFamily::Expressions;
  else if (fam == "sampled")
    spec.family = CurveFamily::Sampled;
  else if (fam == "angles")
    spec.family = CurveFamily::Angles;
  else
    throw ParseError("curve spec: unknown family '" + fam + "'");

  const json params = doc.contains("params") ? doc["params"] : json::object();

  if (spec.family != CurveFamily::Sampled) {
    if (!doc.contains("range") || !doc["range"].is_array() || doc["range"].size() != 2)
      throw ParseError("curve spec: 'range' must be [tau0, tau1]");
    spec.tau0 = doc["range"][0].get<double>();
    spec.tau1 = doc["range"][1].get<double>();
    if (!(spec.tau0 < spec.tau1))
      throw ParseError("curve spec: 'range' requires tau0 < tau1");
    if (!doc.contains("samples") || !doc["samples"].is_number_integer())
      throw ParseError("curve spec: missing integer key 'samples'");
    spec.samples = doc["samples"].get<int>();
    if (spec.samples < 8) throw ParseError("curve spec: 'samples' must be >= 8");
    if (spec.samples > 10'000'000)
      throw ParseError("curve spec: 'samples' exceeds the 1e7 guard");
  }

  switch (spec.family) {
    case CurveFamily::Helix:
      spec.radius = require_number(params, "radius");
      spec.pitch = require_number(params, "pitch");
      if (spec.radius <= 0) throw ParseError("curve spec: params.radius must be > 0");
      break;
    case CurveFamily::Expressions:
      spec.ex_t = parse_member_expr(params, "t", "tau");
      spec.ex_u = parse_member_expr(params, "u", "tau");
      spec.ex_v = parse_member_expr(params, "v", "tau");
      break;
    case CurveFamily::Angles:
      spec.ex_zeta = parse_member_expr(params, "zeta", "t");
      spec.ex_theta = parse_member_expr(params, "theta", "t");
      break;
    case CurveFamily::Sampled: {
      if (!params.contains("points") || !params["points"].is_array())
        throw ParseError("curve spec: params.points must be an array of [t,u,v]");
      for (const auto& p : params["points"]) {
        if (!p.is_array() || p.size() != 3)
          throw ParseError("curve spec: params.points entries must be [t,u,v]");
        spec.points.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
      }
      if (spec.points.size() < 8)
        throw ParseError("curve spec: params.points needs at least 8 samples");
      spec.tau0 = 0;
      spec.tau1 = static_cast<double>(spec.points.size() - 1);
      spec.samples = static_cast<int>(spec.points.size());
      break;
    }
  }
  return spec;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& x,
                                         const std::vector<double>& f) {
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t i = 1; i < x.size(); ++i)
    out[i] = out[i - 1] + 0.5 * (f[i] + f[i - 1]) * (x[i] - x[i - 1]);
  return out;
}

namespace {

// Central differences interior, second-order one-sided at the ends.
std::vector<Vec3> finite_difference(const std::vector<double>& tau,
                                    const std::vector<Vec3>& pos) {
  const std::size_t n = pos.size();
  std::vector<Vec3> d(n);
  const double h = tau[1] - tau[0];
  d[0] = (1.0 / (2 * h)) * (-3.0 * pos[0] + 4.0 * pos[1] - pos[2]);
  d[n - 1] = (1.0 / (2 * h)) * (3.0 * pos[n - 1] - 4.0 * pos[n - 2] + pos[n - 3]);
  for (std::size_t i = 1; i + 1 < n; ++i)
    d[i] = (1.0 / (tau[i + 1] - tau[i - 1])) * (pos[i + 1] - pos[i - 1]);
  return d;
}

void finish_curve(DirectrixCurve& c) {
  std::vector<double> speed(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    speed[i] = norm(c.dpos[i]);
    if (!(speed[i] > 0))
      throw SingularError("curve is not regular: zero differential at sample " +
                          std::to_string(i));
  }
  c.sigma = cumulative_trapezoid(c.tau, speed);
}

}  // namespace

DirectrixCurve sample_curve(const CurveSpec& spec) {
  if (spec.family == CurveFamily::Angles)
    throw ParseError("sample_curve: the angles family goes through curve_from_angles");

  DirectrixCurve c;
  const int n = spec.samples;
  c.tau.resize(n);
  c.pos.resize(n);

  if (spec.family == CurveFamily::Sampled) {
    for (int i = 0; i < n; ++i) c.tau[i] = static_cast<double>(i);
    c.pos = spec.points;
    c.dpos = finite_difference(c.tau, c.pos);
    finish_curve(c);
    return c;
  }

  const double dtau = (spec.tau1 - spec.tau0) / (n - 1);
  for (int i = 0; i < n; ++i) c.tau[i] = spec.tau0 + i * dtau;

  if (spec.family == CurveFamily::Helix) {
    c.dpos.resize(n);
    for (int i = 0; i < n; ++i) {
      const double t = c.tau[i];
      c.pos[i] = {spec.radius * std::cos(t), spec.radius * std::sin(t), spec.pitch * t};
      c.dpos[i] = {-spec.radius * std::sin(t), spec.radius * std::cos(t), spec.pitch};
    }
  } else {
    for (int i = 0; i < n; ++i) {
      const std::map<std::string, double> env = {{"tau", c.tau[i]}};
      c.pos[i] = {expr::eval(spec.ex_t, env), expr::eval(spec.ex_u, env),
                  expr::eval(spec.ex_v, env)};
    }
    c.dpos = finite_difference(c.tau, c.pos);
  }
  finish_curve(c);
  return c;
}

AngleProfile angles_from_curve(const DirectrixCurve& curve) {
  AngleProfile prof;
  prof.tau = curve.tau;
  const std::size_t n = curve.size();
  prof.zeta.resize(n);
  prof.theta.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 d = curve.dpos[i];
    const double n2 = std::hypot(d.x, d.y);
    const double nn = norm(d);
    if (n2 / nn < kSingularTol)
      throw SingularError("angles_from_curve: vertical tangent (sin theta ~ 0) at sample " +
                          std::to_string(i));
    if (std::abs(d.x) / n2 < kSingularTol)
      throw SingularError(
          "angles_from_curve: ruling projection degenerate (sin zeta ~ 0) at sample " +
          std::to_string(i));
    // Fold both angles with sign(dt) so the ruling direction stays on the
    // tangent line while zeta remains inside (0, pi).
    const double sgn = d.x > 0 ? 1.0 : -1.0;
    prof.zeta[i] = std::atan2(sgn * d.x, sgn * d.y);
    prof.theta[i] = std::acos(std::clamp(sgn * d.z / nn, -1.0, 1.0));
  }
  return prof;
}

DirectrixCurve curve_from_angles(const std::vector<double>& t,
                                 const std::vector<double>& zeta,
                                 const std::vector<double>& theta) {
  const std::size_t n = t.size();
  if (n < 3 || zeta.size() != n || theta.size() != n)
    throw ParseError("curve_from_angles: grids must agree and hold >= 3 samples");

  DirectrixCurve c;
  c.tau = t;
  c.dpos.resize(n);
  std::vector<double> du(n), dv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sz = std::sin(zeta[i]);
    const double st = std::sin(theta[i]);
    if (std::abs(sz) < kSingularTol || std::abs(st) < kSingularTol)
      throw SingularError("curve_from_angles: unbounded integrand at sample " +
                          std::to_string(i));
    du[i] = std::cos(zeta[i]) / sz;                      // 1 / tan zeta
    dv[i] = std::cos(theta[i]) / (sz * st);              // 1 / (sin zeta tan theta)
    c.dpos[i] = {1.0, du[i], dv[i]};
  }
  const std::vector<double> u = cumulative_trapezoid(t, du);
  const std::vector<double> v = cumulative_trapezoid(t, dv);
  c.pos.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.pos[i] = {t[i], u[i], v[i]};
  finish_curve(c);
  return c;
}

}  // namespace devsurf
