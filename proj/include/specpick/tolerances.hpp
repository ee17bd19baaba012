#pragma once

namespace specpick {

/// Numerical thresholds shared by every module.
///
/// Spectral decisions (multiplicities, minimal-polynomial exponents, fibre
/// grouping) are integer-valued, so each of them is taken against one of these
/// thresholds rather than against exact zero.
struct Tolerances {
  double cluster_tol = 1e-7;       // root/eigenvalue identification radius
  double multiplicity_tol = 1e-10; // relative size of Taylor coefficients treated as vanishing
  double rank_tol = 1e-8;          // relative pivot threshold in rank decisions
  double drop_tol = 1e-8;          // relative threshold for ord_a g
  double report_tol = 1e-9;        // margin required before a verdict is certified
  double residual_tol = 1e-10;     // root acceptance |p(r)| <= residual_tol * (1 + |p|_1)
  int max_iterations = 200;        // root-finder budget
  int order_cap = 64;              // largest order of vanishing probed
  bool strict = false;             // cross-check multiplicities and fibre gaps
};

}  // namespace specpick
