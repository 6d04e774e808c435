#ifndef DEVSURF_CURVE_HPP
#define DEVSURF_CURVE_HPP

#include <string>
#include <vector>

#include "devsurf/error.hpp"
#include "devsurf/expr.hpp"
#include "devsurf/vec.hpp"

namespace devsurf {

enum class CurveFamily { Helix, Expressions, Sampled, Angles };

// Validated description of a directrix curve (or of an angle profile when
// family == Angles). Expressions are in the parameter variable "tau",
// except the Angles family whose expressions are in the abscissa "t".
struct CurveSpec {
  CurveFamily family = CurveFamily::Helix;
  double tau0 = 0, tau1 = 1;
  int samples = 64;

  // helix: (t,u,v) = (radius cos tau, radius sin tau, pitch tau)
  double radius = 1, pitch = 1;

  // expressions: t(tau), u(tau), v(tau)
  expr::AstPtr ex_t, ex_u, ex_v;

  // sampled: explicit polyline; tau is the sample index unless given
  std::vector<Vec3> points;

  // angles: zeta(t), theta(t)
  expr::AstPtr ex_zeta, ex_theta;
};

// Sampled space curve with differential directions per unit d(tau) and
// cumulative arc length.
struct DirectrixCurve {
  std::vector<double> tau;
  std::vector<Vec3> pos;    // (t, u, v)
  std::vector<Vec3> dpos;   // (dt, du, dv) per unit d(tau)
  std::vector<double> sigma;  // cumulative arc length, sigma[0] == 0

  std::size_t size() const { return tau.size(); }
};

// Per-sample tangent angles and the accumulated development angle.
// zeta, theta lie in the open interval (0, pi); omega starts at 0 and is
// monotone non-decreasing once filled by the development module.
struct AngleProfile {
  std::vector<double> tau;
  std::vector<double> zeta, theta, omega;

  std::size_t size() const { return tau.size(); }
};

// Parses the JSON curve-spec document. Throws ParseError naming the
// offending key on schema violations.
CurveSpec parse_curve_spec(const std::string& json_text);

// Tabulates positions and differentials. Helix differentials are closed
// form; expression and sampled families use central finite differences
// (second-order one-sided at the endpoints). Throws SingularError if a
// differential vanishes.
DirectrixCurve sample_curve(const CurveSpec& spec);

// Recovers zeta, theta from the differentials. The branch is fixed so
// that the ruling direction (sin theta sin zeta, sin theta cos zeta,
// cos theta) points along the tangent, oriented to keep zeta in (0, pi):
// both angle folds follow the sign of dt. omega is left empty.
AngleProfile angles_from_curve(const DirectrixCurve& curve);

// Inverse direction: integrates u = int dt / tan zeta and
// v = int dt / (sin zeta tan theta) by cumulative trapezoid, starting at
// (t0, 0, 0). Differentials are set in closed form.
DirectrixCurve curve_from_angles(const std::vector<double>& t,
                                 const std::vector<double>& zeta,
                                 const std::vector<double>& theta);

// Helper shared by the integration routines: cumulative trapezoid of the
// per-sample rate f (per unit x) over the grid x, starting at 0.
std::vector<double> cumulative_trapezoid(const std::vector<double>& x,
                                         const std::vector<double>& f);

}  // namespace devsurf

#endif
