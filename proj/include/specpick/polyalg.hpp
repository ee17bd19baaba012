#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "specpick/error.hpp"
#include "specpick/polynomial.hpp"
#include "specpick/tolerances.hpp"

namespace specpick {

struct Root {
  Cplx value;
  int multiplicity = 1;
};

/// Distinct roots with multiplicities; `expanded()` is the list repeated by multiplicity.
struct RootMultiset {
  std::vector<Root> entries;

  int total_multiplicity() const {
    int s = 0;
    for (const auto& e : entries) s += e.multiplicity;
    return s;
  }
  std::vector<Cplx> expanded() const {
    std::vector<Cplx> out;
    for (const auto& e : entries)
      for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.value);
    return out;
  }
  std::vector<Cplx> support() const {
    std::vector<Cplx> out;
    for (const auto& e : entries) out.push_back(e.value);
    return out;
  }
};

/// Roots of `p` with multiplicities.
///
/// Simultaneous (Aberth-Ehrlich) iteration followed by clustering: points
/// closer than `cluster_tol` are merged, then neighbouring clusters are merged
/// into an m-fold root when, at the centre refined by Newton's method on
/// p^(m-1), the Taylor coefficients of order < m vanish to `multiplicity_tol`
/// (or to rounding level) and a Pellet test isolates exactly m roots. The
/// tests run on p rescaled by a power of two so its roots lie in the unit
/// disc. Throws InvalidArgument for degree < 1 and NonConvergence when a
/// residual exceeds `residual_tol * (1 + |p|_1)` of the monic polynomial.
RootMultiset poly_roots(const ComplexPolynomial& p, const Tolerances& tol = {});

/// Raw Aberth-Ehrlich approximations (one per root, unclustered).
std::vector<Cplx> aberth_approximations(const ComplexPolynomial& monic_p, int max_iterations);

/// |z1 - z2| / |1 - conj(z2) z1|; both arguments must lie in the open disc.
double mobius_distance(Cplx z1, Cplx z2);

/// (z - a) / (1 - conj(a) z), the disc automorphism sending a to 0.
Cplx disc_automorphism(Cplx a, Cplx z);

/// max of the two directed max-min distances between nonempty finite sets.
template <typename Point, typename Metric>
double hausdorff_distance(const std::vector<Point>& a, const std::vector<Point>& b, Metric&& metric) {
  if (a.empty() || b.empty()) throw InvalidArgument("hausdorff_distance: empty point set");
  auto directed = [&](const std::vector<Point>& from, const std::vector<Point>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) best = std::min(best, static_cast<double>(metric(p, q)));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

inline bool in_open_disc(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()) && std::abs(z) < 1.0; }

}  // namespace specpick
