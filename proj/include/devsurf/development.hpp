#ifndef DEVSURF_DEVELOPMENT_HPP
#define DEVSURF_DEVELOPMENT_HPP

#include <memory>

#include "devsurf/curve.hpp"
#include "devsurf/curve_field.hpp"
#include "devsurf/vec.hpp"

namespace devsurf {

// Developed directrix: the plane image of the space curve, anchored at
// (0,0) with omega[0] = 0 (development is unique up to a planar rigid
// motion; comparisons elsewhere use lengths and angles only).
struct DevelopedDirectrix {
  std::vector<double> tau;
  std::vector<double> pd, qd;   // developed coordinates
  std::vector<double> omega;
  std::vector<double> sigma;    // arc length, shared with the 3D curve

  std::size_t size() const { return tau.size(); }
};

// Fills omega by cumulative trapezoid of sqrt(dzeta^2 sin^2 theta +
// dtheta^2); monotone non-decreasing, omega[0] = 0.
AngleProfile omega_profile(const AngleProfile& profile);

// Integrates pd = int dt sin(omega) / (sin zeta sin theta) and the cosine
// companion. The integrand is the signed arc element, so the developed
// curve preserves arc length. profile.omega must be filled.
DevelopedDirectrix plane_directrix(const DirectrixCurve& curve, const AngleProfile& profile);

// (T, U) = (pd - s sin omega, qd - s cos omega) with linear interpolation
// in tau. Throws DomainError when tau is out of range.
Vec2 develop_point(const DevelopedDirectrix& dev, double tau, double s);

// Developed curvature d(omega)/d(sigma) by central differences.
std::vector<double> developed_curvature(const DevelopedDirectrix& dev);

// Continuous development of a CurveField. omega, pd, qd are integrated by
// classical RK4 on a dense internal grid and interpolated with cubic
// Hermite pieces (nodal derivatives are exact), which keeps probe-step
// differences accurate to far below the verification tolerances.
class DevelopmentField {
 public:
  explicit DevelopmentField(std::shared_ptr<const CurveField> curve, int nodes = 20001);

  double omega(double tau) const;
  Vec2 directrix(double tau) const;          // (pd, qd)
  Vec2 develop(double tau, double s) const;  // (T, U)
  Vec3 surface3(double tau, double s) const; // tangent-developable point
  const CurveField& curve() const { return *curve_; }

  // The six flattening functions at tau, from the closed-form solution
  // (derivatives of the direction cosines taken against omega).
  struct Sextet {
    double l, m, n, lambda, mu, nu;
    double omega;
  };
  Sextet sextet_at(double tau) const;

 private:
  double eval(const std::vector<double>& y, const std::vector<double>& dy, double tau,
              double* deriv) const;

  std::shared_ptr<const CurveField> curve_;
  std::vector<double> tau_;
  std::vector<double> om_, pd_, qd_;     // nodal values
  std::vector<double> dom_, dpd_, dqd_;  // nodal derivatives
  double h_;
};

}  // namespace devsurf

#endif
