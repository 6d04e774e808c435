#include "devsurf/frame_sextet.hpp"

#include <cmath>

namespace devsurf {

namespace {

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

DirectionCosines direction_cosines(const AngleProfile& profile) {
  DirectionCosines out;
  out.dc.resize(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double sz = std::sin(profile.zeta[i]), cz = std::cos(profile.zeta[i]);
    const double st = std::sin(profile.theta[i]), ct = std::cos(profile.theta[i]);
    out.dc[i] = {sz * st, cz * st, ct};
  }
  return out;
}

FrameSextet sextet(const AngleProfile& profile) {
  const std::size_t n = profile.size();
  if (n < 3) throw ParseError("sextet: need at least 3 samples");
  if (profile.omega.size() != n)
    throw ParseError("sextet: profile.omega must be filled (omega_profile)");

  const std::vector<double> dz = grid_derivative(profile.tau, profile.zeta);
  const std::vector<double> dt = grid_derivative(profile.tau, profile.theta);

  FrameSextet sx;
  sx.tau = profile.tau;
  sx.omega = profile.omega;
  sx.f.resize(n);
  sx.degenerate.assign(n, false);
  std::size_t live = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sz = std::sin(profile.zeta[i]), cz = std::cos(profile.zeta[i]);
    const double st = std::sin(profile.theta[i]), ct = std::cos(profile.theta[i]);
    const double p = sz * st, q = cz * st, r = ct;
    // exact Jacobian applied to the sampled (d zeta, d theta)
    const double dp = dz[i] * cz * st + dt[i] * sz * ct;
    const double dq = -dz[i] * sz * st + dt[i] * cz * ct;
    const double dr = -dt[i] * st;
    const double dom = std::sqrt(dz[i] * dz[i] * st * st + dt[i] * dt[i]);
    if (dom < kSingularTol * (std::abs(dz[i]) + std::abs(dt[i]) + kSingularTol)) {
      sx.degenerate[i] = true;
      sx.f[i] = {0, 0, 0, 0, 0, 0};
      continue;
    }
    ++live;
    const double so = std::sin(profile.omega[i]), co = std::cos(profile.omega[i]);
    sx.f[i] = {p * so + dp / dom * co, q * so + dq / dom * co, r * so + dr / dom * co,
               p * co - dp / dom * so, q * co - dq / dom * so, r * co - dr / dom * so};
  }
  if (live == 0)
    throw SingularError("sextet: degenerate development (d omega vanishes everywhere)");
  return sx;
}

ConditionReport check_conditions(const FrameSextet& sx, const DevelopmentField& field,
                                 double h, double s_probe) {
  ConditionReport rep;
  std::size_t live = 0;
  for (std::size_t i = 0; i < sx.size(); ++i) {
    if (sx.degenerate[i]) continue;
    ++live;
    const auto& f = sx.f[i];
    const double iv = std::abs(f[0] * f[0] + f[1] * f[1] + f[2] * f[2] - 1.0);
    const double v = std::abs(f[3] * f[3] + f[4] * f[4] + f[5] * f[5] - 1.0);
    const double vi = std::abs(f[0] * f[3] + f[1] * f[4] + f[2] * f[5]);
    rep.residual_iv = std::max(rep.residual_iv, iv);
    rep.residual_v = std::max(rep.residual_v, v);
    rep.residual_vi = std::max(rep.residual_vi, vi);
  }
  if (live == 0) {
    rep.degenerate = true;
    return rep;
  }

  // Differential conditions: dx = l dT + lambda dU (and companions) over
  // displacements (h, 0) and (0, h) at interior samples.
  const double lo = field.curve().tau0() + 2 * h;
  const double hi = field.curve().tau1() - 2 * h;
  const std::size_t stride = std::max<std::size_t>(1, sx.size() / 197);
  for (std::size_t i = 0; i < sx.size(); i += stride) {
    if (sx.degenerate[i]) continue;
    const double tau = sx.tau[i];
    if (tau < lo || tau > hi) continue;
    ++rep.samples_checked;
    const auto& f = sx.f[i];
    const Vec3 x0 = field.surface3(tau, s_probe);
    const Vec2 w0 = field.develop(tau, s_probe);
    const double probes[2][2] = {{h, 0.0}, {0.0, h}};
    for (const auto& pr : probes) {
      const Vec3 x1 = field.surface3(tau + pr[0], s_probe + pr[1]);
      const Vec2 w1 = field.develop(tau + pr[0], s_probe + pr[1]);
      const double dT = w1.x - w0.x, dU = w1.y - w0.y;
      const Vec3 dx = x1 - x0;
      const double rx = std::abs(dx.x - (f[0] * dT + f[3] * dU));
      const double ry = std::abs(dx.y - (f[1] * dT + f[4] * dU));
      const double rz = std::abs(dx.z - (f[2] * dT + f[5] * dU));
      const double r = std::max({rx, ry, rz});
      if (r > rep.residual_differential) {
        rep.residual_differential = r;
        rep.argmax_tau = tau;
      }
    }
  }
  return rep;
}

TangentRelationReport check_tangent_relation(const FrameSextet& sx) {
  TangentRelationReport rep;
  const std::size_t n = sx.size();
  if (n < 3) throw ParseError("check_tangent_relation: need at least 3 samples");

  // central differences of the sextet arrays, per pair (l,lambda) etc.
  struct Pair {
    std::vector<double> dA, dB;  // d(latin), d(greek)
  };
  std::array<Pair, 3> pairs;
  for (int pi = 0; pi < 3; ++pi) {
    pairs[pi].dA.assign(n, 0);
    pairs[pi].dB.assign(n, 0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (sx.degenerate[i - 1] || sx.degenerate[i + 1]) continue;
      pairs[pi].dA[i] = sx.f[i + 1][pi] - sx.f[i - 1][pi];
      pairs[pi].dB[i] = sx.f[i + 1][pi + 3] - sx.f[i - 1][pi + 3];
    }
  }
  double scale = 0;
  for (int pi = 0; pi < 3; ++pi)
    for (std::size_t i = 1; i + 1 < n; ++i)
      scale = std::max(scale, std::abs(pairs[pi].dA[i]) + std::abs(pairs[pi].dB[i]));
  if (scale <= 0) {
    rep.degenerate = true;  // constant frame
    return rep;
  }
  const double skip_below = 0.05 * scale;
  for (int pi = 0; pi < 3; ++pi) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (sx.degenerate[i]) continue;
      const double dA = pairs[pi].dA[i], dB = pairs[pi].dB[i];
      const double mag = std::abs(dA) + std::abs(dB);
      if (mag < skip_below) continue;
      // bounded form of d(greek)/d(latin) = -tan omega
      const double r =
          std::abs(dA * std::sin(sx.omega[i]) + dB * std::cos(sx.omega[i])) / mag;
      ++rep.samples_used;
      if (r > rep.max_residual) {
        rep.max_residual = r;
        rep.argmax_tau = sx.tau[i];
      }
    }
  }
  if (rep.samples_used == 0) rep.degenerate = true;
  return rep;
}

}  // namespace devsurf
