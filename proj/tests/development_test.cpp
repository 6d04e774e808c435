#include <doctest.h>

#include <cmath>
#include <memory>

#include "devsurf/curve_field.hpp"
#include "devsurf/development.hpp"

using namespace devsurf;

namespace {

constexpr double kPi = 3.14159265358979323846;

CurveSpec helix_spec(double tau0, double tau1, int n) {
  CurveSpec s;
  s.family = CurveFamily::Helix;
  s.radius = 1;
  s.pitch = 1;
  s.tau0 = tau0;
  s.tau1 = tau1;
  s.samples = n;
  return s;
}

AngleProfile linear_profile(int n, double z0, double dz, double t0, double dt) {
  AngleProfile p;
  p.tau.resize(n);
  p.zeta.resize(n);
  p.theta.resize(n);
  for (int i = 0; i < n; ++i) {
    p.tau[i] = double(i) / (n - 1);
    p.zeta[i] = z0 + dz * p.tau[i];
    p.theta[i] = t0 + dt * p.tau[i];
  }
  return p;
}

}  // namespace

TEST_CASE("omega_profile constant-angle reductions") {
  const AngleProfile a = omega_profile(linear_profile(201, 0.8, 0.6, 1.1, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a.omega[i] ==
          doctest::Approx(std::sin(1.1) * 0.6 * a.tau[i]).epsilon(1e-10));

  const AngleProfile b = omega_profile(linear_profile(201, 0.8, 0.0, 0.9, 0.5));
  for (std::size_t i = 0; i < b.size(); ++i)
    CHECK(b.omega[i] == doctest::Approx(b.theta[i] - 0.9).epsilon(1e-10));
}

TEST_CASE("helix development angle and curvature") {
  const DirectrixCurve c = sample_curve(helix_spec(0.2, kPi - 0.2, 10000));
  const AngleProfile p = omega_profile(angles_from_curve(c));
  for (std::size_t i = 0; i < p.size(); i += 999)
    CHECK(p.omega[i] ==
          doctest::Approx((p.tau[i] - 0.2) / std::sqrt(2.0)).epsilon(1e-9));

  const DevelopedDirectrix dev = plane_directrix(c, p);
  const std::vector<double> kappa = developed_curvature(dev);
  for (std::size_t i = 1; i + 1 < kappa.size(); i += 499)
    CHECK(kappa[i] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("helix develops onto a circle of radius 2") {
  const DirectrixCurve c = sample_curve(helix_spec(0.2, kPi - 0.2, 4001));
  const AngleProfile p = omega_profile(angles_from_curve(c));
  const DevelopedDirectrix dev = plane_directrix(c, p);
  // curvature 1/2 and omega(0) = 0 put the center at distance 2 along the
  // normal of the start point; the development begins at the origin with
  // the signed tangent fixing the normal direction (-2, 0).
  const double cx = -2.0, cy = 0.0;
  for (std::size_t i = 0; i < dev.size(); i += 100)
    CHECK(std::hypot(dev.pd[i] - cx, dev.qd[i] - cy) ==
          doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("development of a planar curve is a rigid motion of its projection") {
  CurveSpec planar;
  planar.family = CurveFamily::Expressions;
  planar.ex_t = expr::parse("tau", {"tau"});
  planar.ex_u = expr::parse("0.4*tau^2", {"tau"});
  planar.ex_v = expr::parse("1", {"tau"});
  planar.tau0 = 0.2;
  planar.tau1 = 1.8;
  planar.samples = 2001;
  const DirectrixCurve c = sample_curve(planar);
  const AngleProfile p = omega_profile(angles_from_curve(c));
  const DevelopedDirectrix dev = plane_directrix(c, p);
  for (std::size_t i = 0; i < c.size(); i += 250) {
    for (std::size_t j = i + 125; j < c.size(); j += 250) {
      const double d3 = std::hypot(c.pos[i].x - c.pos[j].x, c.pos[i].y - c.pos[j].y);
      const double d2 = std::hypot(dev.pd[i] - dev.pd[j], dev.qd[i] - dev.qd[j]);
      CHECK(d2 == doctest::Approx(d3).epsilon(1e-7));
    }
  }
}

TEST_CASE("develop_point basics") {
  const DirectrixCurve c = sample_curve(helix_spec(0.3, 2.8, 257));
  const AngleProfile p = omega_profile(angles_from_curve(c));
  const DevelopedDirectrix dev = plane_directrix(c, p);
  const Vec2 at0 = develop_point(dev, c.tau[40], 0.0);
  CHECK(at0.x == doctest::Approx(dev.pd[40]).epsilon(1e-12));
  CHECK(at0.y == doctest::Approx(dev.qd[40]).epsilon(1e-12));
  CHECK_THROWS_AS(develop_point(dev, 5.0, 0.0), DomainError);
}

TEST_CASE("straight directrix develops with zero curvature") {
  std::vector<double> t(65), z(65, 0.9), th(65, 1.2);
  for (int i = 0; i < 65; ++i) t[i] = 0.1 * i;
  const DirectrixCurve line = curve_from_angles(t, z, th);
  AngleProfile p;
  p.tau = t;
  p.zeta = z;
  p.theta = th;
  p = omega_profile(p);
  const DevelopedDirectrix dev = plane_directrix(line, p);
  for (double k : developed_curvature(dev)) CHECK(std::abs(k) <= 1e-12);
  // length of the straight developed segment equals sigma
  CHECK(std::hypot(dev.pd.back(), dev.qd.back()) ==
        doctest::Approx(line.sigma.back()).epsilon(1e-10));
}

TEST_CASE("continuous development matches the discrete one on the grid") {
  const DirectrixCurve c = sample_curve(helix_spec(0.2, kPi - 0.2, 4001));
  const AngleProfile p = omega_profile(angles_from_curve(c));
  const DevelopedDirectrix disc = plane_directrix(c, p);
  auto field = std::make_shared<HelixField>(1.0, 1.0, 0.2, kPi - 0.2);
  DevelopmentField dev(field);
  for (std::size_t i = 0; i < c.size(); i += 397) {
    CHECK(dev.omega(c.tau[i]) == doctest::Approx(disc.omega[i]).epsilon(1e-9));
    const Vec2 d = dev.directrix(c.tau[i]);
    // the discrete trapezoid integral carries O(dtau^2) ~ 5e-7 error
    CHECK(d.x == doctest::Approx(disc.pd[i]).scale(1).epsilon(1e-6));
    CHECK(d.y == doctest::Approx(disc.qd[i]).scale(1).epsilon(1e-6));
  }
}

TEST_CASE("T - U tan(omega) depends on tau alone") {
  auto field = std::make_shared<HelixField>(1.0, 1.0, 0.2, kPi - 0.2);
  DevelopmentField dev(field);
  for (double tau : {0.5, 1.0, 1.7, 2.4}) {
    const double om = dev.omega(tau);
    const Vec2 a = dev.develop(tau, 0.3), b = dev.develop(tau, 1.7);
    CHECK(a.x - a.y * std::tan(om) ==
          doctest::Approx(b.x - b.y * std::tan(om)).epsilon(1e-9));
  }
}

TEST_CASE("developed arc length equals the space arc length") {
  const DirectrixCurve c = sample_curve(helix_spec(0.3, 2.8, 4001));
  const AngleProfile p = omega_profile(angles_from_curve(c));
  const DevelopedDirectrix dev = plane_directrix(c, p);
  double len = 0;
  for (std::size_t i = 1; i < dev.size(); ++i)
    len += std::hypot(dev.pd[i] - dev.pd[i - 1], dev.qd[i] - dev.qd[i - 1]);
  CHECK(len == doctest::Approx(c.sigma.back()).epsilon(1e-6));
}
