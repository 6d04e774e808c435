#ifndef DEVSURF_FRAME_SEXTET_HPP
#define DEVSURF_FRAME_SEXTET_HPP

#include <array>

#include "devsurf/curve.hpp"
#include "devsurf/development.hpp"

namespace devsurf {

// Unit ruling direction per sample: (sin zeta sin theta, cos zeta sin
// theta, cos theta).
struct DirectionCosines {
  std::vector<std::array<double, 3>> dc;
};

// The six flattening functions per sample, with the companion omega grid.
// Samples where d(omega) vanishes carry the degenerate flag (the closed
// form is 0/0 there; a straight directrix has no preferred frame).
struct FrameSextet {
  std::vector<double> tau, omega;
  // l, m, n, lambda, mu, nu
  std::vector<std::array<double, 6>> f;
  std::vector<bool> degenerate;

  std::size_t size() const { return tau.size(); }
};

DirectionCosines direction_cosines(const AngleProfile& profile);

// Closed-form sextet. The differentials of the direction cosines and of
// omega are both formed from the same central differences of (zeta,
// theta) through the exact Jacobian, so the algebraic conditions hold to
// rounding regardless of grid resolution. Throws SingularError when every
// sample is degenerate.
FrameSextet sextet(const AngleProfile& profile);

struct ConditionReport {
  double residual_iv = 0, residual_v = 0, residual_vi = 0;  // algebraic
  double residual_differential = 0;  // dx vs l dT + lambda dU (and y, z)
  double argmax_tau = 0;
  int samples_checked = 0;
  bool degenerate = false;
};

// Algebraic conditions from the sextet arrays; the differential
// conditions by comparing finite differences of the 3D coordinates with
// l dT + lambda dU over displacements of size h in tau and in s,
// evaluated against the continuous development.
ConditionReport check_conditions(const FrameSextet& sextet, const DevelopmentField& field,
                                 double h, double s_probe = 1.0);

struct TangentRelationReport {
  double max_residual = 0;
  double argmax_tau = 0;
  int samples_used = 0;
  bool degenerate = false;  // all samples skipped (constant frame)
};

// The relation dl sin omega + dlambda cos omega = 0 (and the m, n pairs),
// tested on sample differences. Samples whose differentials are tiny
// compared with the largest one are skipped: near critical points of l
// the relative quotient is indeterminate at any resolution.
TangentRelationReport check_tangent_relation(const FrameSextet& sextet);

}  // namespace devsurf

#endif
