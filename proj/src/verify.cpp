#include "devsurf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

namespace devsurf {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

constexpr double kFloor = 1e-300;

}  // namespace

void VerificationReport::add(CheckEntry e) {
  entries.push_back(std::move(e));
  std::sort(entries.begin(), entries.end(),
            [](const CheckEntry& a, const CheckEntry& b) { return a.check < b.check; });
}

bool VerificationReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) {
    arr.push_back({{"check", e.check},
                   {"tolerance", e.tolerance},
                   {"max_residual", e.max_residual},
                   {"argmax", {e.argmax[0], e.argmax[1]}},
                   {"samples", e.samples},
                   {"seed", e.seed},
                   {"pass", e.pass},
                   {"ms", e.ms}});
  }
  return {{"checks", arr}};
}

CheckEntry isometry_triangle_check(const SurfaceFn& surface, const PlaneFn& development,
                                   const Domain2& domain, int samples, double h,
                                   double tolerance, std::uint64_t seed) {
  Stopwatch sw;
  CheckEntry e;
  e.check = "isometry_triangle";
  e.tolerance = tolerance;
  e.samples = samples;
  e.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> du(domain.u0, domain.u1 - h);
  std::uniform_real_distribution<double> dv(domain.v0, domain.v1 - h);
  for (int i = 0; i < samples; ++i) {
    const double u = du(rng), v = dv(rng);
    const Vec3 A = surface(u, v), B = surface(u, v + h), C = surface(u + h, v);
    const Vec2 a = development(u, v), b = development(u, v + h), c = development(u + h, v);
    const double s3[3] = {norm(B - A), norm(C - A), norm(C - B)};
    const double s2[3] = {norm(b - a), norm(c - a), norm(c - b)};
    for (int k = 0; k < 3; ++k) {
      const double r = std::abs(s3[k] - s2[k]) / (s3[k] + kFloor);
      if (r > e.max_residual) {
        e.max_residual = r;
        e.argmax = {u, v};
      }
    }
  }
  e.pass = e.max_residual <= tolerance;
  e.ms = sw.ms();
  return e;
}

CheckEntry ruling_coplanarity_check(const std::function<Vec3(double)>& point,
                                    const std::function<Vec3(double)>& ruling,
                                    double tau0, double tau1, int samples, double h,
                                    double tolerance) {
  Stopwatch sw;
  CheckEntry e;
  e.check = "ruling_coplanarity";
  e.tolerance = tolerance;
  e.samples = samples;
  for (int i = 0; i < samples; ++i) {
    const double tau = tau0 + (tau1 - h - tau0) * i / std::max(1, samples - 1);
    Vec3 e1 = ruling(tau), e2 = ruling(tau + h);
    e1 = (1.0 / norm(e1)) * e1;
    e2 = (1.0 / norm(e2)) * e2;
    Vec3 chord = point(tau + h) - point(tau);
    const double cn = norm(chord);
    if (cn < kFloor) continue;
    chord = (1.0 / cn) * chord;
    const double r = std::abs(triple(e1, e2, chord)) / h;
    if (r > e.max_residual) {
      e.max_residual = r;
      e.argmax = {tau, 0};
    }
  }
  e.pass = e.max_residual <= tolerance;
  e.ms = sw.ms();
  return e;
}

CheckEntry homogeneity_check(const std::function<double(double, double)>& f,
                             const Domain2& domain, int samples, double tolerance,
                             std::uint64_t seed) {
  Stopwatch sw;
  CheckEntry e;
  e.check = "homogeneity";
  e.tolerance = tolerance;
  e.samples = samples;
  e.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dx(domain.u0, domain.u1);
  std::uniform_real_distribution<double> dy(domain.v0, domain.v1);
  const double scales[] = {0.5, 2.0, 3.0};
  for (int i = 0; i < samples; ++i) {
    const double x = dx(rng), y = dy(rng);
    const double base = f(x, y);
    for (double lam : scales) {
      const double r =
          std::abs(f(lam * x, lam * y) - lam * base) / (std::abs(lam * base) + kFloor);
      if (r > e.max_residual) {
        e.max_residual = r;
        e.argmax = {x, y};
      }
    }
  }
  e.pass = e.max_residual <= tolerance;
  e.ms = sw.ms();
  return e;
}

CheckEntry implicit_developability_check(const std::function<double(Vec3)>& F,
                                         const std::vector<Vec3>& points, double h,
                                         double tolerance) {
  Stopwatch sw;
  CheckEntry e;
  e.check = "implicit_developability";
  e.tolerance = tolerance;
  e.samples = static_cast<long>(points.size());

  auto partial = [&](Vec3 p, int axis) {
    Vec3 a = p, b = p;
    (axis == 0 ? a.x : axis == 1 ? a.y : a.z) += h;
    (axis == 0 ? b.x : axis == 1 ? b.y : b.z) -= h;
    return (F(a) - F(b)) / (2 * h);
  };
  auto second = [&](Vec3 p, int ai, int aj) {
    if (ai == aj) {
      Vec3 a = p, b = p;
      (ai == 0 ? a.x : ai == 1 ? a.y : a.z) += h;
      (ai == 0 ? b.x : ai == 1 ? b.y : b.z) -= h;
      return (F(a) - 2 * F(p) + F(b)) / (h * h);
    }
    Vec3 pp = p, pm = p, mp = p, mm = p;
    auto bump = [](Vec3& q, int axis, double d) {
      (axis == 0 ? q.x : axis == 1 ? q.y : q.z) += d;
    };
    bump(pp, ai, h);
    bump(pp, aj, h);
    bump(pm, ai, h);
    bump(pm, aj, -h);
    bump(mp, ai, -h);
    bump(mp, aj, h);
    bump(mm, ai, -h);
    bump(mm, aj, -h);
    return (F(pp) - F(pm) - F(mp) + F(mm)) / (4 * h * h);
  };

  for (const Vec3& p : points) {
    const double g[3] = {partial(p, 0), partial(p, 1), partial(p, 2)};
    const double gn2 = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
    if (gn2 < 1e-20)
      throw SingularError("implicit_developability_check: vanishing gradient");
    double H[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) H[i][j] = H[j][i] = second(p, i, j);
    // K = grad . adj(H) . grad / |grad|^4
    double adj[3][3];
    adj[0][0] = H[1][1] * H[2][2] - H[1][2] * H[2][1];
    adj[0][1] = H[0][2] * H[2][1] - H[0][1] * H[2][2];
    adj[0][2] = H[0][1] * H[1][2] - H[0][2] * H[1][1];
    adj[1][0] = H[1][2] * H[2][0] - H[1][0] * H[2][2];
    adj[1][1] = H[0][0] * H[2][2] - H[0][2] * H[2][0];
    adj[1][2] = H[0][2] * H[1][0] - H[0][0] * H[1][2];
    adj[2][0] = H[1][0] * H[2][1] - H[1][1] * H[2][0];
    adj[2][1] = H[0][1] * H[2][0] - H[0][0] * H[2][1];
    adj[2][2] = H[0][0] * H[1][1] - H[0][1] * H[1][0];
    double acc = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) acc += g[i] * adj[i][j] * g[j];
    const double K = acc / (gn2 * gn2);
    // scale by the local coordinate magnitude squared
    const double scale = 1 + std::abs(p.x) + std::abs(p.y) + std::abs(p.z);
    const double r = std::abs(K) * scale * scale;
    if (r > e.max_residual) {
      e.max_residual = r;
      e.argmax = {p.x, p.y};
    }
  }
  e.pass = e.max_residual <= tolerance;
  e.ms = sw.ms();
  return e;
}

CheckEntry curvature_flatness_check(const SurfaceFn& surface, const Domain2& domain,
                                    int nu, int nv, double h, double tolerance,
                                    const std::string& name) {
  Stopwatch sw;
  CheckEntry e;
  e.check = name;
  e.tolerance = tolerance;
  e.samples = static_cast<long>(nu) * nv;
  for (int i = 0; i < nu; ++i) {
    const double u = domain.u0 + (domain.u1 - domain.u0) * i / std::max(1, nu - 1);
    for (int j = 0; j < nv; ++j) {
      const double v = domain.v0 + (domain.v1 - domain.v0) * j / std::max(1, nv - 1);
      const double K = gaussian_curvature_estimate(surface, u, v, h);
      const Vec3 p = surface(u, v);
      const double scale = 1 + norm(p);
      const double r = std::abs(K) * scale * scale;
      if (r > e.max_residual) {
        e.max_residual = r;
        e.argmax = {u, v};
      }
    }
  }
  e.pass = e.max_residual <= tolerance;
  e.ms = sw.ms();
  return e;
}

}  // namespace devsurf
