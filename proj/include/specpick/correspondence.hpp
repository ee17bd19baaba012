#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "specpick/polyalg.hpp"

namespace specpick {

/// Target domain: the disc |w - center| < radius.
struct DomainSpec {
  Cplx center = 0.0;
  double radius = 1.0;

  bool contains(Cplx w) const { return std::abs(w - center) < radius; }
  /// radius - |w - center|; negative outside.
  double boundary_distance(Cplx w) const { return radius - std::abs(w - center); }
};

/// Invariant distance on a target domain.
using DomainMetric = std::function<double(Cplx, Cplx)>;

/// Proper correspondence from the disc given by its defining polynomial
/// w^n + sum_j (-1)^j a_j(z) w^(n-j), with polynomial a_j.
struct Correspondence {
  int degree = 1;
  std::vector<ComplexPolynomial> coeffs;  // a_1 .. a_n
  DomainSpec domain;

  /// The polynomial in w at z = zeta.
  ComplexPolynomial at(Cplx zeta) const;
  /// Throws InvalidArgument unless coeffs has `degree` entries and the domain radius is positive.
  void validate() const;
};

/// Roots of the defining polynomial at zeta, with multiplicity. Throws
/// DomainError for |zeta| >= 1 and ProperViolation when a root leaves the domain.
RootMultiset fiber(const Correspondence& g, Cplx zeta, const Tolerances& tol = {});

/// M((p - c) / R, (q - c) / R); throws DomainError outside the disc.
double caratheodory_distance(const DomainSpec& dom, Cplx p, Cplx q);

/// The closed-form Caratheodory distance of `dom` as a metric object.
DomainMetric caratheodory_metric(const DomainSpec& dom);

struct SchwarzProductReport {
  std::vector<Cplx> fiber1, fiber2;  // multiplicity-expanded
  double term21 = 0.0;  // max over fiber2 of the product over fiber1
  double term12 = 0.0;
  double lhs = 0.0, rhs = 0.0, slack = 0.0;  // slack = rhs - lhs
};

/// max{ max_mu prod_nu C(nu, mu) } over the expanded fibres, in both
/// directions, against M(zeta1, zeta2). An empty metric means the domain's closed form.
SchwarzProductReport check_schwarz_product(const Correspondence& g, Cplx zeta1, Cplx zeta2,
                                           const Tolerances& tol = {}, const DomainMetric& metric = {});

struct SchwarzHausdorffReport {
  std::vector<Cplx> support1, support2;
  double lhs = 0.0;  // Hausdorff distance under the metric
  double rhs = 0.0;  // M(zeta1, zeta2)^(1/n)
  double slack = 0.0;
  double lhs_power = 0.0;      // lhs^n
  double product_bound = 0.0;  // the product form's lhs, which bounds lhs^n
};

SchwarzHausdorffReport check_schwarz_hausdorff(const Correspondence& g, Cplx zeta1, Cplx zeta2,
                                               const Tolerances& tol = {}, const DomainMetric& metric = {});

/// Sampling grid for the properness certificate. Radii are spread evenly over
/// [0, max_radius], with one sample at the origin.
struct ProperGrid {
  int radial = 64;
  int angular = 128;
  double max_radius = 0.999;
  double margin = 1e-3;
};

/// Certificate at grid resolution only; pathological growth between grid
/// points or beyond max_radius is not seen.
struct ProperCertificate {
  bool proper = true;
  ProperGrid grid;
  double min_distance = 0.0;  // smallest distance from a fibre point to the boundary
  std::optional<Cplx> z, w;   // a violating pair when not proper
};

ProperCertificate validate_properness(const Correspondence& g, const ProperGrid& grid = {},
                                      const Tolerances& tol = {});

}  // namespace specpick
