#include "devsurf/tangent_dev.hpp"

#include <algorithm>
#include <cmath>

namespace devsurf {

namespace {

struct Interp {
  double t, u, v, zeta, theta;
};

Interp interpolate(const DirectrixCurve& curve, const AngleProfile& profile, double tau) {
  const auto& grid = curve.tau;
  if (tau < grid.front() - 1e-12 || tau > grid.back() + 1e-12)
    throw DomainError("surface_point: tau out of range");
  auto it = std::upper_bound(grid.begin(), grid.end(), tau);
  std::size_t k = it == grid.begin() ? 0 : static_cast<std::size_t>(it - grid.begin()) - 1;
  k = std::min(k, grid.size() - 2);
  const double w = (tau - grid[k]) / (grid[k + 1] - grid[k]);
  auto mix = [w](double a, double b) { return a + w * (b - a); };
  return {mix(curve.pos[k].x, curve.pos[k + 1].x), mix(curve.pos[k].y, curve.pos[k + 1].y),
          mix(curve.pos[k].z, curve.pos[k + 1].z),
          mix(profile.zeta[k], profile.zeta[k + 1]),
          mix(profile.theta[k], profile.theta[k + 1])};
}

}  // namespace

SurfacePoint surface_point(const DirectrixCurve& curve, const AngleProfile& profile,
                           double tau, double s) {
  const Interp q = interpolate(curve, profile, tau);
  const double st = std::sin(q.theta), ct = std::cos(q.theta);
  const double sz = std::sin(q.zeta), cz = std::cos(q.zeta);
  SurfacePoint out;
  out.tau = tau;
  out.s = s;
  out.p = {q.t - s * st * sz, q.u - s * st * cz, q.v - s * ct};
  return out;
}

SurfaceMesh surface_grid(const DirectrixCurve& curve, const AngleProfile& profile,
                         double tau_lo, double tau_hi, double smin, double smax,
                         int ntau, int ns) {
  if (!(smin > 0))
    throw DomainError("surface_grid: smin must be > 0 (edge-of-regression exclusion)");
  if (ntau < 2 || ns < 2) throw DomainError("surface_grid: grid must be at least 2x2");
  SurfaceMesh mesh;
  mesh.ntau = ntau;
  mesh.ns = ns;
  mesh.smin = smin;
  mesh.smax = smax;
  mesh.vertices.reserve(static_cast<std::size_t>(ntau) * ns);
  for (int i = 0; i < ntau; ++i) {
    const double tau = tau_lo + (tau_hi - tau_lo) * i / (ntau - 1);
    for (int j = 0; j < ns; ++j) {
      const double s = smin + (smax - smin) * j / (ns - 1);
      mesh.vertices.push_back(surface_point(curve, profile, tau, s));
    }
  }
  return mesh;
}

double gaussian_curvature_estimate(const SurfaceFn& surface, double u, double v, double h) {
  const Vec3 pu = (1.0 / (2 * h)) * (surface(u + h, v) - surface(u - h, v));
  const Vec3 pv = (1.0 / (2 * h)) * (surface(u, v + h) - surface(u, v - h));
  const Vec3 p0 = surface(u, v);
  const Vec3 puu = (1.0 / (h * h)) * (surface(u + h, v) - 2.0 * p0 + surface(u - h, v));
  const Vec3 pvv = (1.0 / (h * h)) * (surface(u, v + h) - 2.0 * p0 + surface(u, v - h));
  const Vec3 puv = (1.0 / (4 * h * h)) * (surface(u + h, v + h) - surface(u + h, v - h) -
                                          surface(u - h, v + h) + surface(u - h, v - h));

  const double E = dot(pu, pu), F = dot(pu, pv), G = dot(pv, pv);
  const double det = E * G - F * F;
  if (det < 1e-12 * std::max(E * G, 1e-30))
    throw SingularError("gaussian_curvature_estimate: degenerate first fundamental form");

  Vec3 nrm = cross(pu, pv);
  nrm = (1.0 / norm(nrm)) * nrm;
  const double L = dot(puu, nrm), M = dot(puv, nrm), N = dot(pvv, nrm);
  return (L * N - M * M) / det;
}

}  // namespace devsurf
