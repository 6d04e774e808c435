#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "devsurf/curve_field.hpp"
#include "devsurf/development.hpp"
#include "devsurf/frame_sextet.hpp"

using namespace devsurf;

namespace {

constexpr double kPi = 3.14159265358979323846;

AngleProfile helix_profile(int n) {
  CurveSpec s;
  s.family = CurveFamily::Helix;
  s.radius = 1;
  s.pitch = 1;
  s.tau0 = 0.2;
  s.tau1 = kPi - 0.2;
  s.samples = n;
  return omega_profile(angles_from_curve(sample_curve(s)));
}

AngleProfile random_profile(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  AngleProfile p;
  p.tau.resize(n);
  p.zeta.resize(n);
  p.theta.resize(n);
  const double z0 = 1.0 + 0.2 * U(rng), t0 = 0.9 + 0.2 * U(rng);
  const double az = 0.15 * U(rng), at = 0.12 * U(rng);
  const double pz = kPi * U(rng), pt = kPi * U(rng);
  for (int i = 0; i < n; ++i) {
    p.tau[i] = double(i) / (n - 1);
    p.zeta[i] = z0 + 0.4 * p.tau[i] + az * std::sin(2 * kPi * p.tau[i] + pz);
    p.theta[i] = t0 + 0.3 * p.tau[i] + at * std::cos(2 * kPi * p.tau[i] + pt);
  }
  return omega_profile(p);
}

}  // namespace

TEST_CASE("direction cosines of the ruling") {
  AngleProfile p;
  p.tau = {0, 1, 2};
  p.zeta = {kPi / 2, kPi / 2, kPi / 3};
  p.theta = {kPi / 2, kPi / 4, kPi / 2};
  const DirectionCosines dc = direction_cosines(p);
  CHECK(dc.dc[0][0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(dc.dc[0][1]) <= 1e-15);
  CHECK(std::abs(dc.dc[0][2]) <= 1e-15);
  CHECK(dc.dc[1][0] == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(dc.dc[1][2] == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  for (const auto& e : dc.dc)
    CHECK(e[0] * e[0] + e[1] * e[1] + e[2] * e[2] ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sextet closed forms for one-angle motions") {
  const int n = 101;
  AngleProfile p;
  p.tau.resize(n);
  p.zeta.resize(n);
  p.theta.assign(n, kPi / 2);
  p.omega.resize(n);
  for (int i = 0; i < n; ++i) {
    p.tau[i] = double(i) / (n - 1);
    p.zeta[i] = 0.5 + 0.8 * p.tau[i];
    p.omega[i] = p.zeta[i];  // theta fixed: the turning angle is zeta itself
  }
  const FrameSextet sx = sextet(p);
  for (std::size_t i = 0; i < sx.size(); ++i) {
    CHECK(sx.f[i][0] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(std::abs(sx.f[i][1]) <= 1e-7);
    CHECK(std::abs(sx.f[i][2]) <= 1e-14);
    CHECK(std::abs(sx.f[i][3]) <= 1e-7);
    CHECK(sx.f[i][4] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(std::abs(sx.f[i][5]) <= 1e-14);
  }

  AngleProfile q;
  q.tau = p.tau;
  q.zeta.assign(n, kPi / 2);
  q.theta.resize(n);
  q.omega.resize(n);
  for (int i = 0; i < n; ++i) {
    q.theta[i] = 0.6 + 0.7 * q.tau[i];
    q.omega[i] = q.theta[i];  // zeta fixed: the turning angle is theta
  }
  const FrameSextet sy = sextet(q);
  for (std::size_t i = 0; i < sy.size(); ++i) {
    CHECK(sy.f[i][0] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(std::abs(sy.f[i][4]) <= 1e-14);
    CHECK(std::abs(sy.f[i][3]) <= 1e-7);
    CHECK(sy.f[i][5] == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("unit and orthogonality conditions to rounding on random profiles") {
  std::mt19937_64 rng(0x4519);
  for (int trial = 0; trial < 50; ++trial) {
    const AngleProfile p = random_profile(rng, 1024);
    const FrameSextet sx = sextet(p);
    for (std::size_t i = 0; i < sx.size(); ++i) {
      if (sx.degenerate[i]) continue;
      const auto& f = sx.f[i];
      CHECK(std::abs(f[0] * f[0] + f[1] * f[1] + f[2] * f[2] - 1) <= 1e-12);
      CHECK(std::abs(f[3] * f[3] + f[4] * f[4] + f[5] * f[5] - 1) <= 1e-12);
      CHECK(std::abs(f[0] * f[3] + f[1] * f[4] + f[2] * f[5]) <= 1e-12);
    }
  }
}

TEST_CASE("the frame rotates the ruling: l sin omega + lambda cos omega = p") {
  std::mt19937_64 rng(7);
  const AngleProfile p = random_profile(rng, 512);
  const FrameSextet sx = sextet(p);
  for (std::size_t i = 0; i < sx.size(); ++i) {
    if (sx.degenerate[i]) continue;
    const double so = std::sin(sx.omega[i]), co = std::cos(sx.omega[i]);
    const double st = std::sin(p.theta[i]);
    CHECK(sx.f[i][0] * so + sx.f[i][3] * co ==
          doctest::Approx(std::sin(p.zeta[i]) * st).epsilon(1e-12));
    CHECK(sx.f[i][1] * so + sx.f[i][4] * co ==
          doctest::Approx(std::cos(p.zeta[i]) * st).epsilon(1e-12));
    CHECK(sx.f[i][2] * so + sx.f[i][5] * co ==
          doctest::Approx(std::cos(p.theta[i])).epsilon(1e-12));
  }
}

TEST_CASE("a corrupted greek component breaks orthogonality loudly") {
  std::mt19937_64 rng(11);
  const AngleProfile p = random_profile(rng, 512);
  FrameSextet sx = sextet(p);
  double worst = 0;
  for (std::size_t i = 0; i < sx.size(); ++i) {
    if (sx.degenerate[i]) continue;
    auto f = sx.f[i];
    f[3] = -f[3];
    worst = std::max(worst, std::abs(f[0] * f[3] + f[1] * f[4] + f[2] * f[5]));
  }
  CHECK(worst > 1e-3);
}

TEST_CASE("a constant frame is reported as degenerate") {
  AngleProfile p;
  p.tau.resize(33);
  for (int i = 0; i < 33; ++i) p.tau[i] = 0.1 * i;
  // binary-exact constants keep even the one-sided boundary differences
  // at exactly zero
  p.zeta.assign(33, 0.5);
  p.theta.assign(33, 1.25);
  p = omega_profile(p);
  CHECK_THROWS_AS(sextet(p), SingularError);
}

TEST_CASE("helix tangent relation residual and grid convergence") {
  const TangentRelationReport fine = check_tangent_relation(sextet(helix_profile(10000)));
  CHECK_FALSE(fine.degenerate);
  CHECK(fine.samples_used > 1000);
  CHECK(fine.max_residual <= 2e-6);

  const TangentRelationReport c2 = check_tangent_relation(sextet(helix_profile(2048)));
  const TangentRelationReport c4 = check_tangent_relation(sextet(helix_profile(4096)));
  const double ratio = c2.max_residual / c4.max_residual;
  CHECK(ratio >= 1.7);
  CHECK(ratio <= 4.5);
}

TEST_CASE("differential conditions against the continuous development") {
  auto field = std::make_shared<HelixField>(1.0, 1.0, 0.2, kPi - 0.2);
  const DevelopmentField dev(field);
  const FrameSextet sx = sextet(helix_profile(4096));

  const ConditionReport r3 = check_conditions(sx, dev, 1e-3);
  CHECK_FALSE(r3.degenerate);
  CHECK(r3.samples_checked > 100);
  CHECK(r3.residual_iv <= 1e-12);
  CHECK(r3.residual_v <= 1e-12);
  CHECK(r3.residual_vi <= 1e-12);
  CHECK(r3.residual_differential <= 1e-5);

  const ConditionReport r4 = check_conditions(sx, dev, 1e-4);
  CHECK(r4.residual_differential <= 1e-7);
}

TEST_CASE("closed-form sextet agrees with the sampled one") {
  auto field = std::make_shared<HelixField>(1.0, 1.0, 0.2, kPi - 0.2);
  const DevelopmentField dev(field);
  const AngleProfile p = helix_profile(4096);
  const FrameSextet sx = sextet(p);
  for (std::size_t i = 100; i < sx.size(); i += 797) {
    const DevelopmentField::Sextet c = dev.sextet_at(sx.tau[i]);
    CHECK(c.l == doctest::Approx(sx.f[i][0]).scale(1).epsilon(1e-6));
    CHECK(c.m == doctest::Approx(sx.f[i][1]).scale(1).epsilon(1e-6));
    CHECK(c.n == doctest::Approx(sx.f[i][2]).scale(1).epsilon(1e-6));
    CHECK(c.lambda == doctest::Approx(sx.f[i][3]).scale(1).epsilon(1e-6));
    CHECK(c.mu == doctest::Approx(sx.f[i][4]).scale(1).epsilon(1e-6));
    CHECK(c.nu == doctest::Approx(sx.f[i][5]).scale(1).epsilon(1e-6));
  }
}
