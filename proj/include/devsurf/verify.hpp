#ifndef DEVSURF_VERIFY_HPP
#define DEVSURF_VERIFY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>

#include "devsurf/tangent_dev.hpp"
#include "devsurf/vec.hpp"

#include <json.hpp>

namespace devsurf {

inline constexpr std::uint64_t kDefaultSeed = 0x4519;

struct CheckEntry {
  std::string check;
  double tolerance = 0;
  double max_residual = 0;
  std::array<double, 2> argmax{0, 0};
  long samples = 0;
  std::uint64_t seed = kDefaultSeed;
  bool pass = false;
  double ms = 0;
};

struct VerificationReport {
  std::vector<CheckEntry> entries;  // kept sorted by check id

  void add(CheckEntry e);
  bool all_pass() const;
  nlohmann::json to_json() const;
};

using PlaneFn = std::function<Vec2(double, double)>;

struct Domain2 {
  double u0, u1, v0, v1;
};

// Elementary-triangle isometry: for seeded samples (u, v), the three side
// lengths of {P(u,v), P(u,v+h), P(u+h,v)} in 3D against the developed
// image, as relative mismatch.
CheckEntry isometry_triangle_check(const SurfaceFn& surface, const PlaneFn& development,
                                   const Domain2& domain, int samples, double h,
                                   double tolerance, std::uint64_t seed = kDefaultSeed);

// Scalar triple product of two neighboring rulings and their connecting
// chord, normalized by h; O(h) for developables, bounded away from 0 for
// skew ruled surfaces.
CheckEntry ruling_coplanarity_check(const std::function<Vec3(double)>& point,
                                    const std::function<Vec3(double)>& ruling,
                                    double tau0, double tau1, int samples, double h,
                                    double tolerance);

// f(lambda x, lambda y) = lambda f(x, y) over seeded samples and the
// scale set {0.5, 2, 3}.
CheckEntry homogeneity_check(const std::function<double(double, double)>& f,
                             const Domain2& domain, int samples, double tolerance,
                             std::uint64_t seed = kDefaultSeed);

// Gaussian curvature of the level set F = 0 via gradient and Hessian
// central differences, evaluated at the supplied on-surface points.
CheckEntry implicit_developability_check(const std::function<double(Vec3)>& F,
                                         const std::vector<Vec3>& points, double h,
                                         double tolerance);

// Max |K| (1 + |p|)^2 over a (u,v) grid of a parametric surface; the
// local length scale makes the record dimensionless.
CheckEntry curvature_flatness_check(const SurfaceFn& surface, const Domain2& domain,
                                    int nu, int nv, double h, double tolerance,
                                    const std::string& name);

}  // namespace devsurf

#endif
