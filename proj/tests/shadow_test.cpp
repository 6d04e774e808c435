#include <doctest.h>

#include <cmath>

#include "devsurf/shadow.hpp"

using namespace devsurf;

namespace {

std::vector<double> grid(double p0, double p1, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = p0 + (p1 - p0) * i / (n - 1);
  return g;
}

}  // namespace

TEST_CASE("profile_from_slope integrates the ordinate") {
  const std::vector<double> g = grid(0.5, 2.5, 33);
  // linear abscissa: the trapezoid rule is exact, ord = (phi^2 - phi0^2)/2
  const ShadowSection lin = profile_from_slope([](double p) { return p; }, g, 0, 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(lin.ord[i] == doctest::Approx(0.5 * (g[i] * g[i] - 0.25)).epsilon(1e-14));

  const ShadowSection flat = profile_from_slope([](double) { return 7.0; }, g, 0, 3.0);
  for (double o : flat.ord) CHECK(o == 3.0);
}

TEST_CASE("circle section from a spec document matches the closed form") {
  const ShadowSection sec = parse_section_spec(
      R"({"family":"circle","range":[-2,2],"samples":4001,)"
      R"("offset":0,"params":{"radius":1.5,"center":[0.3,-0.2]}})");
  for (std::size_t i = 0; i < sec.phi.size(); i += 250) {
    const double w = std::sqrt(1 + sec.phi[i] * sec.phi[i]);
    CHECK(sec.ab[i] == doctest::Approx(0.3 - 1.5 * sec.phi[i] / w).epsilon(1e-12));
    CHECK(sec.ord[i] == doctest::Approx(-0.2 + 1.5 / w).scale(1).epsilon(1e-6));
  }
  // every traced point sits on the circle
  for (std::size_t i = 0; i < sec.phi.size(); i += 199)
    CHECK(std::hypot(sec.ab[i] - 0.3, sec.ord[i] + 0.2) ==
          doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("shadow_point interpolates the ruled sheet") {
  const std::vector<double> g = grid(0.1, 1.9, 257);
  const ShadowSection a = profile_from_slope([](double p) { return 2 * p; }, g, 0, 0);
  ShadowSection b = profile_from_slope([](double p) { return 2 * p; }, g, 1.0, 0);
  const Vec3 at0 = shadow_point(a, b, 1.0, g[40], 0.0);
  CHECK(at0.y == a.ab[40]);
  CHECK(at0.z == a.ord[40]);
  const Vec3 at1 = shadow_point(a, b, 1.0, g[40], 1.0);
  CHECK(at1.y == doctest::Approx(b.ab[40]).epsilon(1e-14));
  CHECK(at1.z == doctest::Approx(b.ord[40]).epsilon(1e-14));
  // identical sections: the sheet is a cylinder, independent of x
  const Vec3 far = shadow_point(a, b, 1.0, g[40], 17.0);
  CHECK(far.y == doctest::Approx(at0.y).epsilon(1e-13));
  CHECK(far.z == doctest::Approx(at0.z).scale(1).epsilon(1e-13));

  CHECK_THROWS_AS(shadow_point(a, b, 0.0, g[40], 0.5), DomainError);
  CHECK_THROWS_AS(shadow_point(a, b, 1.0, 5.0, 0.5), DomainError);
}

TEST_CASE("ProfileQuad validates the developability condition") {
  const std::vector<double> g = grid(0.2, 1.8, 65);
  // P = 2phi, Q = 3phi^2, R = phi^2, S = 2phi^3 satisfies dS dP = dQ dR
  CHECK_NOTHROW(ProfileQuad([](double p) { return 2 * p; },
                            [](double p) { return 3 * p * p; },
                            [](double p) { return p * p; },
                            [](double p) { return 2 * p * p * p; }, g, 1e-6));
  CHECK_THROWS_AS(ProfileQuad([](double p) { return p; },
                              [](double p) { return p * p; },
                              [](double p) { return p; },
                              [](double p) { return p; }, g),
                  DomainError);
}

TEST_CASE("two-section sheet and normal form agree on the grid") {
  const std::vector<double> g = grid(0.2, 1.8, 129);
  const ProfileQuad quad([](double p) { return 2 * p; }, [](double p) { return 3 * p * p; },
                         [](double p) { return p * p; },
                         [](double p) { return 2 * p * p * p; }, g, 1e-6);
  ShadowSection a, b;
  a.phi = b.phi = g;
  a.offset = 0;
  b.offset = 1;
  for (double p : g) {
    a.ab.push_back(2 * p);
    a.ord.push_back(p * p);
    b.ab.push_back(2 * p + 3 * p * p);
    b.ord.push_back(p * p + 2 * p * p * p);
  }
  for (std::size_t i = 0; i < g.size(); i += 16) {
    for (double x : {-0.5, 0.0, 0.7, 2.0}) {
      const Vec3 want = quad.point(g[i], x);
      const Vec3 got = shadow_point(a, b, 1.0, g[i], x);
      CHECK(got.y == doctest::Approx(want.y).scale(1).epsilon(1e-14));
      CHECK(got.z == doctest::Approx(want.z).scale(1).epsilon(1e-14));
    }
  }
}

TEST_CASE("monomial family coefficient recipe") {
  const std::vector<double> g = grid(0.2, 1.5, 33);
  const MonomialQuad m = monomial_family(MonomialParams{}, g);  // f=g=h=k=1, gens 1,0,1,2
  CHECK(m.alpha == 1.0);
  CHECK(m.beta == 2.0);
  CHECK(m.gamma == 2.0);
  CHECK(m.delta == 3.0);
  CHECK(m.a == 1.0);
  CHECK(m.b == 0.5);
  CHECK(m.c == 0.5);
  CHECK(m.d == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  // invariants of the recipe
  CHECK(m.beta - m.alpha == m.delta - m.gamma);
  CHECK(m.b * m.beta / (m.a * m.alpha) ==
        doctest::Approx(m.d * m.delta / (m.c * m.gamma)).epsilon(1e-15));

  MonomialParams q;
  q.f = 1;
  q.g = 2;
  q.h = 6;
  q.k = 1;
  const MonomialQuad mq = monomial_family(q, g);
  CHECK(mq.a == 2.0);
  CHECK(mq.b == 3.0);
  CHECK(mq.c == 1.0);
  CHECK(mq.d == 2.0);
  for (double p : {0.3, 0.9, 1.4})
    for (double x : {0.0, 0.5, 1.0}) {
      CHECK(mq.quad.point(p, x).y == doctest::Approx(2 * p + 3 * p * p * x).epsilon(1e-14));
      CHECK(mq.quad.point(p, x).z ==
            doctest::Approx(p * p + 2 * p * p * p * x).epsilon(1e-14));
    }
}

TEST_CASE("implicit quartic residuals") {
  CHECK(e419_residual(0.0, 3.7) == 0.0);
  CHECK(std::abs(e419_residual(1.0, 1.0)) <= 1e-12);
  CHECK(std::abs(e419_residual(2.0, 0.0)) <= 1e-12);
  for (double p = -2; p <= 2; p += 0.37)
    for (double x = -2; x <= 2; x += 0.41)
      CHECK(std::abs(e419_residual_scaled(p, x)) <= 1e-12);
  CHECK(std::abs(e419_residual_uncorrected(1.0, 1.0)) > 1.0);
}

TEST_CASE("ruling classification: cylinder, cone, general") {
  const char* circ1 =
      R"({"family":"circle","range":[-1.5,1.5],"samples":513,"offset":0,"params":{"radius":1}})";
  const char* circ1b =
      R"({"family":"circle","range":[-1.5,1.5],"samples":513,"offset":1,"params":{"radius":1}})";
  const char* circ2 =
      R"({"family":"circle","range":[-1.5,1.5],"samples":513,"offset":1,"params":{"radius":2}})";

  const Classification cyl =
      classify_ruling_family(parse_section_spec(circ1), parse_section_spec(circ1b), 1.0);
  CHECK(cyl.kind == RulingClass::Cylinder);
  CHECK(cyl.angular_spread <= 1e-10);

  const Classification cone =
      classify_ruling_family(parse_section_spec(circ1), parse_section_spec(circ2), 1.0);
  CHECK(cone.kind == RulingClass::Cone);
  CHECK(cone.apex.x == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(std::abs(cone.apex.y) <= 1e-8);
  CHECK(std::abs(cone.apex.z) <= 1e-8);

  const ShadowSection ell = parse_section_spec(
      R"js({"family":"expressions","range":[-1.5,1.5],"samples":513,"offset":1,)js"
      R"js("params":{"T":"-4*phi/sqrt(4*phi^2 + 1)"}})js");
  const Classification gen =
      classify_ruling_family(parse_section_spec(circ1), ell, 1.0);
  CHECK(gen.kind == RulingClass::General);
}

TEST_CASE("section spec rejects malformed documents") {
  CHECK_THROWS_AS(parse_section_spec("nope"), ParseError);
  CHECK_THROWS_AS(parse_section_spec(R"({"family":"torus","range":[0,1]})"), ParseError);
  CHECK_THROWS_AS(parse_section_spec(R"({"family":"circle","range":[1,0],)"
                                     R"("params":{"radius":1}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_section_spec(R"({"family":"circle","range":[0,1],"params":{}})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_section_spec(R"({"family":"sampled","params":{"phi":[0,1],"abscissa":[0]}})"),
      ParseError);
}
