#ifndef DEVSURF_TANGENT_DEV_HPP
#define DEVSURF_TANGENT_DEV_HPP

#include <functional>

#include "devsurf/curve.hpp"
#include "devsurf/curve_field.hpp"
#include "devsurf/vec.hpp"

namespace devsurf {

struct SurfacePoint {
  Vec3 p;
  double tau = 0, s = 0;
};

// Row-major (tau outer, s inner) grid of surface points. smin > 0 keeps
// meshes away from the edge of regression where the chart degenerates.
struct SurfaceMesh {
  int ntau = 0, ns = 0;
  double smin = 0, smax = 0;
  std::vector<SurfacePoint> vertices;

  const SurfacePoint& at(int i, int j) const { return vertices[i * ns + j]; }
};

// (x, y, z) = (t, u, v) - s (sin theta sin zeta, sin theta cos zeta,
// cos theta), with linear interpolation between curve samples. Negative s
// reaches the other sheet and is allowed here (not in meshes).
SurfacePoint surface_point(const DirectrixCurve& curve, const AngleProfile& profile,
                           double tau, double s);

SurfaceMesh surface_grid(const DirectrixCurve& curve, const AngleProfile& profile,
                         double tau_lo, double tau_hi, double smin, double smax,
                         int ntau, int ns);

using SurfaceFn = std::function<Vec3(double, double)>;

// K = (LN - M^2) / (EG - F^2) with all derivatives of the point function
// taken by central differences of step h. Throws SingularError when the
// first fundamental form degenerates (edge of regression).
double gaussian_curvature_estimate(const SurfaceFn& surface, double u, double v, double h);

}  // namespace devsurf

#endif
