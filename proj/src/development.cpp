#include "devsurf/development.hpp"

#include <algorithm>
#include <cmath>

namespace devsurf {

namespace {

// Central differences interior, second-order one-sided at the ends.
std::vector<double> grid_derivative(const std::vector<double>& x,
                                    const std::vector<double>& f) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  const double h = x[1] - x[0];
  d[0] = (-3 * f[0] + 4 * f[1] - f[2]) / (2 * h);
  d[n - 1] = (3 * f[n - 1] - 4 * f[n - 2] + f[n - 3]) / (2 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (x[i + 1] - x[i - 1]);
  return d;
}

}  // namespace

AngleProfile omega_profile(const AngleProfile& profile) {
  const std::size_t n = profile.size();
  if (n < 3) throw ParseError("omega_profile: need at least 3 samples");
  AngleProfile out = profile;
  const std::vector<double> dz = grid_derivative(profile.tau, profile.zeta);
  const std::vector<double> dt = grid_derivative(profile.tau, profile.theta);
  std::vector<double> rate(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double st = std::sin(profile.theta[i]);
    rate[i] = std::sqrt(dz[i] * dz[i] * st * st + dt[i] * dt[i]);
  }
  out.omega = cumulative_trapezoid(profile.tau, rate);
  return out;
}

DevelopedDirectrix plane_directrix(const DirectrixCurve& curve, const AngleProfile& profile) {
  const std::size_t n = curve.size();
  if (profile.size() != n || profile.omega.size() != n)
    throw ParseError("plane_directrix: curve and profile (with omega) must share the grid");

  std::vector<double> fp(n), fq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sz = std::sin(profile.zeta[i]);
    const double st = std::sin(profile.theta[i]);
    if (std::abs(sz) < kSingularTol || std::abs(st) < kSingularTol)
      throw SingularError("plane_directrix: singular integrand at sample " + std::to_string(i));
    const double element = curve.dpos[i].x / (sz * st);  // signed arc element per d(tau)
    fp[i] = element * std::sin(profile.omega[i]);
    fq[i] = element * std::cos(profile.omega[i]);
  }
  DevelopedDirectrix dev;
  dev.tau = curve.tau;
  dev.omega = profile.omega;
  dev.sigma = curve.sigma;
  dev.pd = cumulative_trapezoid(curve.tau, fp);
  dev.qd = cumulative_trapezoid(curve.tau, fq);
  return dev;
}

namespace {

double lerp_on(const std::vector<double>& grid, const std::vector<double>& f, double x) {
  auto it = std::upper_bound(grid.begin(), grid.end(), x);
  std::size_t k = it == grid.begin() ? 0 : static_cast<std::size_t>(it - grid.begin()) - 1;
  k = std::min(k, grid.size() - 2);
  const double w = (x - grid[k]) / (grid[k + 1] - grid[k]);
  return f[k] + w * (f[k + 1] - f[k]);
}

}  // namespace

Vec2 develop_point(const DevelopedDirectrix& dev, double tau, double s) {
  if (tau < dev.tau.front() - 1e-12 || tau > dev.tau.back() + 1e-12)
    throw DomainError("develop_point: tau out of range");
  const double p = lerp_on(dev.tau, dev.pd, tau);
  const double q = lerp_on(dev.tau, dev.qd, tau);
  const double om = lerp_on(dev.tau, dev.omega, tau);
  return {p - s * std::sin(om), q - s * std::cos(om)};
}

std::vector<double> developed_curvature(const DevelopedDirectrix& dev) {
  if (dev.size() < 3) throw ParseError("developed_curvature: need at least 3 samples");
  const std::vector<double> dom = grid_derivative(dev.tau, dev.omega);
  const std::vector<double> dsig = grid_derivative(dev.tau, dev.sigma);
  std::vector<double> k(dev.size());
  for (std::size_t i = 0; i < dev.size(); ++i) k[i] = dom[i] / dsig[i];
  return k;
}

DevelopmentField::DevelopmentField(std::shared_ptr<const CurveField> curve, int nodes)
    : curve_(std::move(curve)) {
  const double a = curve_->tau0(), b = curve_->tau1();
  const int n = std::max(nodes, 9);
  h_ = (b - a) / (n - 1);
  tau_.resize(n);
  om_.resize(n);
  pd_.resize(n);
  qd_.resize(n);
  dom_.resize(n);
  dpd_.resize(n);
  dqd_.resize(n);

  // State y = (omega, pd, qd); omega' depends only on tau, pd'/qd' on
  // (tau, omega), so RK4 stages close without iteration.
  auto rate = [this](double tau, double om, double* d) {
    const CurveFrame fr = frame_at(*curve_, tau);
    const double st = std::sin(fr.theta);
    d[0] = std::sqrt(fr.dzeta * fr.dzeta * st * st + fr.dtheta * fr.dtheta);
    const double element = fr.sign * fr.speed;
    d[1] = element * std::sin(om);
    d[2] = element * std::cos(om);
  };

  double y[3] = {0, 0, 0};
  double d0[3];
  rate(a, y[0], d0);
  tau_[0] = a;
  om_[0] = pd_[0] = qd_[0] = 0;
  dom_[0] = d0[0];
  dpd_[0] = d0[1];
  dqd_[0] = d0[2];

  for (int i = 1; i < n; ++i) {
    const double t0 = a + (i - 1) * h_;
    double k1[3], k2[3], k3[3], k4[3];
    rate(t0, y[0], k1);
    rate(t0 + 0.5 * h_, y[0] + 0.5 * h_ * k1[0], k2);
    // pd', qd' at the midpoint need the midpoint omega estimate
    {
      double om_mid = y[0] + 0.5 * h_ * k2[0];
      double tmp[3];
      rate(t0 + 0.5 * h_, om_mid, tmp);
      k3[0] = tmp[0];
      k3[1] = tmp[1];
      k3[2] = tmp[2];
    }
    rate(t0 + h_, y[0] + h_ * k3[0], k4);
    for (int j = 0; j < 3; ++j)
      y[j] += h_ / 6.0 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);

    tau_[i] = a + i * h_;
    double dn[3];
    rate(tau_[i], y[0], dn);
    om_[i] = y[0];
    pd_[i] = y[1];
    qd_[i] = y[2];
    dom_[i] = dn[0];
    dpd_[i] = dn[1];
    dqd_[i] = dn[2];
  }
}

double DevelopmentField::eval(const std::vector<double>& y, const std::vector<double>& dy,
                              double tau, double* deriv) const {
  const double a = tau_.front();
  int k = static_cast<int>(std::floor((tau - a) / h_));
  k = std::clamp(k, 0, static_cast<int>(tau_.size()) - 2);
  const double t = (tau - tau_[k]) / h_;
  const double t2 = t * t, t3 = t2 * t;
  const double v = (2 * t3 - 3 * t2 + 1) * y[k] + (t3 - 2 * t2 + t) * h_ * dy[k] +
                   (-2 * t3 + 3 * t2) * y[k + 1] + (t3 - t2) * h_ * dy[k + 1];
  if (deriv) {
    *deriv = ((6 * t2 - 6 * t) * y[k] + (3 * t2 - 4 * t + 1) * h_ * dy[k] +
              (-6 * t2 + 6 * t) * y[k + 1] + (3 * t2 - 2 * t) * h_ * dy[k + 1]) /
             h_;
  }
  return v;
}

double DevelopmentField::omega(double tau) const { return eval(om_, dom_, tau, nullptr); }

Vec2 DevelopmentField::directrix(double tau) const {
  return {eval(pd_, dpd_, tau, nullptr), eval(qd_, dqd_, tau, nullptr)};
}

Vec2 DevelopmentField::develop(double tau, double s) const {
  const double om = omega(tau);
  const Vec2 d = directrix(tau);
  return {d.x - s * std::sin(om), d.y - s * std::cos(om)};
}

Vec3 DevelopmentField::surface3(double tau, double s) const {
  const CurveFrame fr = frame_at(*curve_, tau);
  return curve_->position(tau) - s * ruling_direction(fr.zeta, fr.theta);
}

DevelopmentField::Sextet DevelopmentField::sextet_at(double tau) const {
  const CurveFrame fr = frame_at(*curve_, tau);
  const double sz = std::sin(fr.zeta), cz = std::cos(fr.zeta);
  const double st = std::sin(fr.theta), ct = std::cos(fr.theta);
  const double p = sz * st, q = cz * st, r = ct;
  const double dp = fr.dzeta * cz * st + fr.dtheta * sz * ct;
  const double dq = -fr.dzeta * sz * st + fr.dtheta * cz * ct;
  const double dr = -fr.dtheta * st;
  const double dom = std::sqrt(fr.dzeta * fr.dzeta * st * st + fr.dtheta * fr.dtheta);
  if (dom < kSingularTol * (std::abs(fr.dzeta) + std::abs(fr.dtheta) + kSingularTol))
    throw SingularError("sextet_at: degenerate development (d omega ~ 0)");
  const double om = omega(tau);
  const double so = std::sin(om), co = std::cos(om);
  Sextet sx;
  sx.omega = om;
  sx.l = p * so + dp / dom * co;
  sx.lambda = p * co - dp / dom * so;
  sx.m = q * so + dq / dom * co;
  sx.mu = q * co - dq / dom * so;
  sx.n = r * so + dr / dom * co;
  sx.nu = r * co - dr / dom * so;
  return sx;
}

}  // namespace devsurf
