#ifndef DEVSURF_SHADOW_HPP
#define DEVSURF_SHADOW_HPP

#include <functional>
#include <optional>
#include <string>

#include "devsurf/curve.hpp"
#include "devsurf/vec.hpp"

namespace devsurf {

// Slope-parametrized plane profile: abscissa and ordinate as functions of
// the tangent slope phi, plus the axial offset of the section plane.
struct ShadowSection {
  std::vector<double> phi;
  std::vector<double> ab;   // abscissa (T for section A, t for section B)
  std::vector<double> ord;  // ordinate, ord - ord0 = int phi d(ab)
  double offset = 0;        // axial coordinate of the section plane
};

// Ordinate by cumulative trapezoid of phi dT; ord[0] = ord0.
ShadowSection profile_from_slope(const std::function<double(double)>& abscissa,
                                 const std::vector<double>& phi_grid, double offset = 0,
                                 double ord0 = 0);

// Ruled point between two sections at common slope phi:
// y = T - x (T - t)/a, z = U - x (U - u)/a. phi interpolates linearly on
// the common grid; the sections must share their phi grid.
Vec3 shadow_point(const ShadowSection& a, const ShadowSection& b, double gap, double phi,
                  double x);

// The normal form y = P + Q x, z = R + S x. Construction validates the
// developability condition dS dP = dQ dR on the supplied phi grid.
class ProfileQuad {
 public:
  using Fn = std::function<double(double)>;
  ProfileQuad(Fn P, Fn Q, Fn R, Fn S, const std::vector<double>& phi_grid,
              double tol = 1e-9);

  Vec3 point(double phi, double x) const;
  double P(double phi) const { return P_(phi); }
  double Q(double phi) const { return Q_(phi); }
  double R(double phi) const { return R_(phi); }
  double S(double phi) const { return S_(phi); }

 private:
  Fn P_, Q_, R_, S_;
};

// Monomial family P = a phi^alpha, ..., with the coefficient/exponent
// recipe driven by f, g, h, k and the exponent generators. The generator
// names avoid the sextet's lambda, mu, nu.
struct MonomialParams {
  double f = 1, g = 1, h = 1, k = 1;
  double km = 1, lm = 0, mm = 1, nm = 2;  // exponent generators
};

struct MonomialQuad {
  double a, b, c, d;
  double alpha, beta, gamma, delta;
  ProfileQuad quad;
};

MonomialQuad monomial_family(const MonomialParams& params,
                             const std::vector<double>& phi_grid);

// Residual of -4xy^3 - y^2 + 18xyz + 27x^2z^2 + 4z under y = 2phi +
// 3phi^2 x, z = phi^2 + 2phi^3 x.
double e419_residual(double phi, double x);
// Same, scaled by the largest monomial magnitude at the point.
double e419_residual_scaled(double phi, double x);
// The historical (uncorrected) polynomial, kept as a known-bad fixture.
double e419_residual_uncorrected(double phi, double x);

enum class RulingClass { Cylinder, Cone, General };

struct Classification {
  RulingClass kind = RulingClass::General;
  Vec3 apex{};              // valid for Cone
  double angular_spread = 0;  // max angle between rulings (radians)
  double apex_rms = 0;        // rms distance of rulings from the apex
};

// Cylinder when every ruling is parallel within cyl_tol radians; cone
// when the least-squares intersection point is within cone_tol times the
// section diameter of every ruling.
Classification classify_ruling_family(const ShadowSection& a, const ShadowSection& b,
                                      double gap, double cyl_tol = 1e-10,
                                      double cone_tol = 1e-8);

// Section-spec document (JSON): family circle | expressions | sampled.
ShadowSection parse_section_spec(const std::string& json_text);

}  // namespace devsurf

#endif
