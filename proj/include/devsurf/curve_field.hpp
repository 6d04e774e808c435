#ifndef DEVSURF_CURVE_FIELD_HPP
#define DEVSURF_CURVE_FIELD_HPP

#include <memory>

#include "devsurf/curve.hpp"
#include "devsurf/vec.hpp"

namespace devsurf {

// Continuous view of a directrix curve: position plus first and second
// derivatives at arbitrary parameter values. Closed-form where the family
// allows it; otherwise high-order finite differences of the defining
// expressions. This is what the verification checks with small probe
// steps evaluate against.
class CurveField {
 public:
  virtual ~CurveField() = default;
  virtual Vec3 position(double tau) const = 0;
  virtual Vec3 d1(double tau) const = 0;
  virtual Vec3 d2(double tau) const = 0;
  double tau0() const { return tau0_; }
  double tau1() const { return tau1_; }

 protected:
  CurveField(double tau0, double tau1) : tau0_(tau0), tau1_(tau1) {}
  double tau0_, tau1_;
};

class HelixField final : public CurveField {
 public:
  HelixField(double radius, double pitch, double tau0, double tau1)
      : CurveField(tau0, tau1), r_(radius), c_(pitch) {}
  Vec3 position(double tau) const override;
  Vec3 d1(double tau) const override;
  Vec3 d2(double tau) const override;

 private:
  double r_, c_;
};

class ExprCurveField final : public CurveField {
 public:
  ExprCurveField(expr::AstPtr t, expr::AstPtr u, expr::AstPtr v, double tau0, double tau1);
  Vec3 position(double tau) const override;
  Vec3 d1(double tau) const override;
  Vec3 d2(double tau) const override;

 private:
  expr::AstPtr t_, u_, v_;
  double h_;
};

// Cubic-Hermite interpolation of a sampled polyline (nodal derivatives by
// central differences).
class SampledCurveField final : public CurveField {
 public:
  explicit SampledCurveField(const DirectrixCurve& curve);
  Vec3 position(double tau) const override;
  Vec3 d1(double tau) const override;
  Vec3 d2(double tau) const override;

 private:
  std::vector<double> tau_;
  std::vector<Vec3> pos_, dpos_;
};

// Tangent frame of the curve at tau: the angles, their tau-derivatives,
// the parametric speed, and the orientation sign pairing the ruling with
// the tangent line.
struct CurveFrame {
  double zeta, theta;
  double dzeta, dtheta;  // per unit d(tau)
  double speed;          // |d1|
  double sign;           // +1 when dt > 0, -1 when dt < 0
};

CurveFrame frame_at(const CurveField& field, double tau);

// Unit ruling direction (sin theta sin zeta, sin theta cos zeta, cos theta).
Vec3 ruling_direction(double zeta, double theta);

// Builds the natural field for a spec: closed form for the helix,
// expression-backed otherwise (sampled family interpolates).
std::unique_ptr<CurveField> make_curve_field(const CurveSpec& spec);

}  // namespace devsurf

#endif
