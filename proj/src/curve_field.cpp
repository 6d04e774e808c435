#include "devsurf/curve_field.hpp"

#include <algorithm>
#include <cmath>

namespace devsurf {

Vec3 HelixField::position(double tau) const {
  return {r_ * std::cos(tau), r_ * std::sin(tau), c_ * tau};
}
Vec3 HelixField::d1(double tau) const {
  return {-r_ * std::sin(tau), r_ * std::cos(tau), c_};
}
Vec3 HelixField::d2(double tau) const {
  return {-r_ * std::cos(tau), -r_ * std::sin(tau), 0.0};
}

ExprCurveField::ExprCurveField(expr::AstPtr t, expr::AstPtr u, expr::AstPtr v,
                               double tau0, double tau1)
    : CurveField(tau0, tau1), t_(std::move(t)), u_(std::move(u)), v_(std::move(v)) {
  h_ = std::max(1e-6, 1e-5 * (tau1 - tau0));
}

Vec3 ExprCurveField::position(double tau) const {
  const std::map<std::string, double> env = {{"tau", tau}};
  return {expr::eval(t_, env), expr::eval(u_, env), expr::eval(v_, env)};
}

Vec3 ExprCurveField::d1(double tau) const {
  // five-point fourth-order stencil
  const Vec3 f1 = position(tau + h_), fm1 = position(tau - h_);
  const Vec3 f2 = position(tau + 2 * h_), fm2 = position(tau - 2 * h_);
  return (1.0 / (12 * h_)) * (8.0 * (f1 - fm1) - (f2 - fm2));
}

Vec3 ExprCurveField::d2(double tau) const {
  const Vec3 f0 = position(tau);
  const Vec3 f1 = position(tau + h_), fm1 = position(tau - h_);
  const Vec3 f2 = position(tau + 2 * h_), fm2 = position(tau - 2 * h_);
  return (1.0 / (12 * h_ * h_)) *
         (16.0 * (f1 + fm1) - (f2 + fm2) - 30.0 * f0);
}

SampledCurveField::SampledCurveField(const DirectrixCurve& curve)
    : CurveField(curve.tau.front(), curve.tau.back()),
      tau_(curve.tau),
      pos_(curve.pos),
      dpos_(curve.dpos) {}

namespace {

std::size_t locate(const std::vector<double>& grid, double x) {
  auto it = std::upper_bound(grid.begin(), grid.end(), x);
  std::size_t k = it == grid.begin() ? 0 : static_cast<std::size_t>(it - grid.begin()) - 1;
  return std::min(k, grid.size() - 2);
}

struct HermitePiece {
  double t, h;  // local coordinate in [0,1], interval width
  Vec3 y0, y1, m0, m1;

  Vec3 value() const {
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * (h * m0) +
           (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * (h * m1);
  }
  Vec3 deriv() const {
    const double t2 = t * t;
    return (1.0 / h) * ((6 * t2 - 6 * t) * y0 + (3 * t2 - 4 * t + 1) * (h * m0) +
                        (-6 * t2 + 6 * t) * y1 + (3 * t2 - 2 * t) * (h * m1));
  }
  Vec3 deriv2() const {
    return (1.0 / (h * h)) * ((12 * t - 6) * y0 + (6 * t - 4) * (h * m0) +
                              (-12 * t + 6) * y1 + (6 * t - 2) * (h * m1));
  }
};

}  // namespace

static HermitePiece piece_at(const std::vector<double>& tau, const std::vector<Vec3>& y,
                             const std::vector<Vec3>& dy, double x) {
  const std::size_t k = locate(tau, x);
  const double h = tau[k + 1] - tau[k];
  return {(x - tau[k]) / h, h, y[k], y[k + 1], dy[k], dy[k + 1]};
}

Vec3 SampledCurveField::position(double tau) const {
  return piece_at(tau_, pos_, dpos_, tau).value();
}
Vec3 SampledCurveField::d1(double tau) const {
  return piece_at(tau_, pos_, dpos_, tau).deriv();
}
Vec3 SampledCurveField::d2(double tau) const {
  return piece_at(tau_, pos_, dpos_, tau).deriv2();
}

Vec3 ruling_direction(double zeta, double theta) {
  const double st = std::sin(theta);
  return {st * std::sin(zeta), st * std::cos(zeta), std::cos(theta)};
}

CurveFrame frame_at(const CurveField& field, double tau) {
  const Vec3 d = field.d1(tau);
  const Vec3 dd = field.d2(tau);
  const double n2sq = d.x * d.x + d.y * d.y;
  const double n2 = std::sqrt(n2sq);
  const double n = norm(d);
  if (!(n > 0)) throw SingularError("frame_at: zero differential");
  if (n2 / n < kSingularTol)
    throw SingularError("frame_at: vertical tangent (sin theta ~ 0)");
  if (std::abs(d.x) / n2 < kSingularTol)
    throw SingularError("frame_at: ruling projection degenerate (sin zeta ~ 0)");

  CurveFrame fr;
  fr.sign = d.x > 0 ? 1.0 : -1.0;
  fr.zeta = std::atan2(fr.sign * d.x, fr.sign * d.y);
  fr.theta = std::acos(std::clamp(fr.sign * d.z / n, -1.0, 1.0));
  fr.speed = n;
  fr.dzeta = (dd.x * d.y - d.x * dd.y) / n2sq;
  fr.dtheta = -fr.sign * (dd.z * n2sq - d.z * (d.x * dd.x + d.y * dd.y)) / (n * n * n2);
  return fr;
}

std::unique_ptr<CurveField> make_curve_field(const CurveSpec& spec) {
  switch (spec.family) {
    case CurveFamily::Helix:
      return std::make_unique<HelixField>(spec.radius, spec.pitch, spec.tau0, spec.tau1);
    case CurveFamily::Expressions:
      return std::make_unique<ExprCurveField>(spec.ex_t, spec.ex_u, spec.ex_v, spec.tau0,
                                              spec.tau1);
    case CurveFamily::Sampled:
      return std::make_unique<SampledCurveField>(sample_curve(spec));
    case CurveFamily::Angles: {
      // Tabulate densely, then interpolate.
      std::vector<double> t(spec.samples), z(spec.samples), th(spec.samples);
      const double dt = (spec.tau1 - spec.tau0) / (spec.samples - 1);
      for (int i = 0; i < spec.samples; ++i) {
        t[i] = spec.tau0 + i * dt;
        const std::map<std::string, double> env = {{"t", t[i]}};
        z[i] = expr::eval(spec.ex_zeta, env);
        th[i] = expr::eval(spec.ex_theta, env);
      }
      return std::make_unique<SampledCurveField>(curve_from_angles(t, z, th));
    }
  }
  throw ParseError("make_curve_field: corrupt spec");
}

}  // namespace devsurf
