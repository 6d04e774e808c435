#include "devsurf/shadow.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace devsurf {

ShadowSection profile_from_slope(const std::function<double(double)>& abscissa,
                                 const std::vector<double>& phi_grid, double offset,
                                 double ord0) {
  if (phi_grid.size() < 2) throw ParseError("profile_from_slope: need at least 2 samples");
  ShadowSection sec;
  sec.phi = phi_grid;
  sec.offset = offset;
  sec.ab.resize(phi_grid.size());
  for (std::size_t i = 0; i < phi_grid.size(); ++i) sec.ab[i] = abscissa(phi_grid[i]);
  sec.ord.assign(phi_grid.size(), ord0);
  for (std::size_t i = 1; i < phi_grid.size(); ++i)
    sec.ord[i] = sec.ord[i - 1] +
                 0.5 * (phi_grid[i] + phi_grid[i - 1]) * (sec.ab[i] - sec.ab[i - 1]);
  return sec;
}

namespace {

double lerp_on(const std::vector<double>& grid, const std::vector<double>& f, double x) {
  if (x < grid.front() - 1e-12 || x > grid.back() + 1e-12)
    throw DomainError("shadow: phi outside the common grid");
  auto it = std::upper_bound(grid.begin(), grid.end(), x);
  std::size_t k = it == grid.begin() ? 0 : static_cast<std::size_t>(it - grid.begin()) - 1;
  k = std::min(k, grid.size() - 2);
  const double w = (x - grid[k]) / (grid[k + 1] - grid[k]);
  return f[k] + w * (f[k + 1] - f[k]);
}

}  // namespace

Vec3 shadow_point(const ShadowSection& a, const ShadowSection& b, double gap, double phi,
                  double x) {
  if (!(gap > 0)) throw DomainError("shadow_point: gap must be > 0");
  if (a.phi.size() != b.phi.size())
    throw DomainError("shadow_point: sections must share the phi grid");
  const double T = lerp_on(a.phi, a.ab, phi);
  const double U = lerp_on(a.phi, a.ord, phi);
  const double t = lerp_on(b.phi, b.ab, phi);
  const double u = lerp_on(b.phi, b.ord, phi);
  return {x, T - x * (T - t) / gap, U - x * (U - u) / gap};
}

ProfileQuad::ProfileQuad(Fn P, Fn Q, Fn R, Fn S, const std::vector<double>& phi_grid,
                         double tol)
    : P_(std::move(P)), Q_(std::move(Q)), R_(std::move(R)), S_(std::move(S)) {
  if (phi_grid.size() < 2) throw ParseError("ProfileQuad: need a phi grid");
  double worst = 0, worst_phi = phi_grid.front();
  const double span = phi_grid.back() - phi_grid.front();
  const double h = std::max(1e-6, 1e-5 * std::abs(span));
  for (double phi : phi_grid) {
    const double dP = P_(phi + h) - P_(phi - h);
    const double dQ = Q_(phi + h) - Q_(phi - h);
    const double dR = R_(phi + h) - R_(phi - h);
    const double dS = S_(phi + h) - S_(phi - h);
    const double lhs = dS * dP, rhs = dQ * dR;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 4 * h * h});
    const double r = std::abs(lhs - rhs) / scale;
    if (r > worst) {
      worst = r;
      worst_phi = phi;
    }
  }
  if (worst > tol)
    throw DomainError("ProfileQuad: developability condition dS dP = dQ dR violated, "
                      "max relative violation " +
                      std::to_string(worst) + " at phi = " + std::to_string(worst_phi));
}

Vec3 ProfileQuad::point(double phi, double x) const {
  return {x, P_(phi) + Q_(phi) * x, R_(phi) + S_(phi) * x};
}

MonomialQuad monomial_family(const MonomialParams& p, const std::vector<double>& phi_grid) {
  const double alpha = p.km + p.lm, beta = p.km + p.mm;
  const double gamma = p.lm + p.nm, delta = p.mm + p.nm;
  if (std::abs(alpha) < 1e-300 || std::abs(beta) < 1e-300 || std::abs(gamma) < 1e-300 ||
      std::abs(delta) < 1e-300)
    throw DomainError("monomial_family: zero denominator in coefficient recipe");
  const double a = p.f * p.g / alpha, b = p.f * p.h / beta;
  const double c = p.g * p.k / gamma, d = p.h * p.k / delta;
  auto mono = [](double coeff, double ex) {
    return [coeff, ex](double phi) { return coeff * std::pow(phi, ex); };
  };
  return {a,     b,    c,     d,    alpha, beta, gamma, delta,
          ProfileQuad(mono(a, alpha), mono(b, beta), mono(c, gamma), mono(d, delta),
                      phi_grid)};
}

double e419_residual(double phi, double x) {
  const double y = 2 * phi + 3 * phi * phi * x;
  const double z = phi * phi + 2 * phi * phi * phi * x;
  return -4 * x * y * y * y - y * y + 18 * x * y * z + 27 * x * x * z * z + 4 * z;
}

double e419_residual_scaled(double phi, double x) {
  const double y = 2 * phi + 3 * phi * phi * x;
  const double z = phi * phi + 2 * phi * phi * phi * x;
  const double terms[] = {-4 * x * y * y * y, -y * y, 18 * x * y * z, 27 * x * x * z * z,
                          4 * z};
  double sum = 0, scale = 1;
  for (double t : terms) {
    sum += t;
    scale = std::max(scale, std::abs(t));
  }
  return sum / scale;
}

double e419_residual_uncorrected(double phi, double x) {
  const double y = 2 * phi + 3 * phi * phi * x;
  const double z = phi * phi + 2 * phi * phi * phi * x;
  return 4 * y * y * y * x + 72 * y * y * x * x * z - y * y - 18 * y * x * z +
         27 * x * x * z * z + 2 * z;
}

Classification classify_ruling_family(const ShadowSection& a, const ShadowSection& b,
                                      double gap, double cyl_tol, double cone_tol) {
  if (a.phi.size() != b.phi.size() || a.phi.size() < 2)
    throw DomainError("classify_ruling_family: sections must share the phi grid");
  const std::size_t n = a.phi.size();

  double diam = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : {std::size_t{0}, n - 1})
      diam = std::max(diam, std::hypot(a.ab[i] - a.ab[j], a.ord[i] - a.ord[j]));
  if (!(diam > 0)) throw DomainError("classify_ruling_family: degenerate section");

  std::vector<Vec3> pts(n), dirs(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = {0, a.ab[i], a.ord[i]};
    Vec3 d = {gap, b.ab[i] - a.ab[i], b.ord[i] - a.ord[i]};
    dirs[i] = (1.0 / norm(d)) * d;
  }

  Classification cls;
  for (std::size_t i = 0; i < n; ++i)
    cls.angular_spread =
        std::max(cls.angular_spread, std::asin(std::min(1.0, norm(cross(dirs[i], dirs[0])))));
  if (cls.angular_spread <= cyl_tol) {
    cls.kind = RulingClass::Cylinder;
    return cls;
  }

  // Least-squares point minimizing summed squared distances to the rulings:
  // sum (I - d d^T) X = sum (I - d d^T) P.
  double A[3][3] = {};
  double rhs[3] = {};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 d = dirs[i];
    const double proj[3][3] = {{1 - d.x * d.x, -d.x * d.y, -d.x * d.z},
                               {-d.y * d.x, 1 - d.y * d.y, -d.y * d.z},
                               {-d.z * d.x, -d.z * d.y, 1 - d.z * d.z}};
    const double p[3] = {pts[i].x, pts[i].y, pts[i].z};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        A[r][c] += proj[r][c];
        rhs[r] += proj[r][c] * p[c];
      }
  }
  // Gaussian elimination with partial pivoting on the 3x3 system.
  int perm[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    std::swap(rhs[col], rhs[piv]);
    (void)perm;
    if (std::abs(A[col][col]) < 1e-14 * n) return cls;  // rank-deficient: general
    for (int r = col + 1; r < 3; ++r) {
      const double f = A[r][col] / A[col][col];
      for (int c = col; c < 3; ++c) A[r][c] -= f * A[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  double x[3];
  for (int r = 2; r >= 0; --r) {
    double acc = rhs[r];
    for (int c = r + 1; c < 3; ++c) acc -= A[r][c] * x[c];
    x[r] = acc / A[r][r];
  }
  const Vec3 apex = {x[0], x[1], x[2]};

  double sq = 0, maxdist = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 w = apex - pts[i];
    const double dist = norm(w - dot(w, dirs[i]) * dirs[i]);
    sq += dist * dist;
    maxdist = std::max(maxdist, dist);
  }
  cls.apex = apex;
  cls.apex_rms = std::sqrt(sq / n);
  if (maxdist <= cone_tol * diam) cls.kind = RulingClass::Cone;
  return cls;
}

ShadowSection parse_section_spec(const std::string& json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("section spec: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("family") || !doc["family"].is_string())
    throw ParseError("section spec: missing string key 'family'");
  const std::string fam = doc["family"].get<std::string>();
  const json params = doc.contains("params") ? doc["params"] : json::object();
  const double offset = doc.value("offset", 0.0);

  if (fam == "sampled") {
    if (!params.contains("phi") || !params.contains("abscissa") ||
        !params.contains("ordinate"))
      throw ParseError("section spec: sampled family needs params.phi/abscissa/ordinate");
    ShadowSection sec;
    sec.offset = offset;
    sec.phi = params["phi"].get<std::vector<double>>();
    sec.ab = params["abscissa"].get<std::vector<double>>();
    sec.ord = params["ordinate"].get<std::vector<double>>();
    if (sec.phi.size() != sec.ab.size() || sec.phi.size() != sec.ord.size() ||
        sec.phi.size() < 2)
      throw ParseError("section spec: sampled arrays must agree and hold >= 2 samples");
    return sec;
  }

  if (!doc.contains("range") || !doc["range"].is_array() || doc["range"].size() != 2)
    throw ParseError("section spec: 'range' must be [phi0, phi1]");
  const double p0 = doc["range"][0].get<double>(), p1 = doc["range"][1].get<double>();
  if (!(p0 < p1)) throw ParseError("section spec: 'range' requires phi0 < phi1");
  const int m = doc.value("samples", 129);
  if (m < 2) throw ParseError("section spec: 'samples' must be >= 2");
  std::vector<double> grid(m);
  for (int i = 0; i < m; ++i) grid[i] = p0 + (p1 - p0) * i / (m - 1);

  if (fam == "circle") {
    if (!params.contains("radius") || !params["radius"].is_number())
      throw ParseError("section spec: circle family needs numeric params.radius");
    const double r = params["radius"].get<double>();
    double cy = 0, cz = 0;
    if (params.contains("center")) {
      cy = params["center"][0].get<double>();
      cz = params["center"][1].get<double>();
    }
    // Tangent-slope parametrization of the circle: the point where
    // dU/dT = phi is (T, U) = (-r phi, r) / sqrt(1 + phi^2), up to center.
    auto absc = [r, cy](double phi) { return cy - r * phi / std::sqrt(1 + phi * phi); };
    ShadowSection sec = profile_from_slope(absc, grid, offset);
    const double ord_exact0 = cz + r / std::sqrt(1 + grid.front() * grid.front());
    for (auto& o : sec.ord) o += ord_exact0;
    return sec;
  }
  if (fam == "expressions") {
    if (!params.contains("T") || !params["T"].is_string())
      throw ParseError("section spec: expressions family needs params.T (in phi)");
    expr::AstPtr ex = expr::parse(params["T"].get<std::string>(), {"phi"});
    auto absc = [ex](double phi) {
      const std::map<std::string, double> env = {{"phi", phi}};
      return expr::eval(ex, env);
    };
    return profile_from_slope(absc, grid, offset);
  }
  throw ParseError("section spec: unknown family '" + fam + "'");
}

}  // namespace devsurf
