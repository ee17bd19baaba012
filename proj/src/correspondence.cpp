#include "specpick/correspondence.hpp"

#include <limits>
#include <numbers>

namespace specpick {
namespace {

void require_node(Cplx z, const char* who) {
  if (!in_open_disc(z)) throw DomainError(std::string(who) + ": node outside the open unit disc");
}

// max over mu in `at` of prod over nu in `over` of d(nu, mu)
double directed_product(const std::vector<Cplx>& over, const std::vector<Cplx>& at, const DomainMetric& d) {
  double worst = 0.0;
  for (const auto& mu : at) {
    double p = 1.0;
    for (const auto& nu : over) p *= d(nu, mu);
    worst = std::max(worst, p);
  }
  return worst;
}

}  // namespace

ComplexPolynomial Correspondence::at(Cplx zeta) const {
  validate();
  const auto n = static_cast<std::size_t>(degree);
  std::vector<Cplx> c(n + 1);
  c[n] = 1.0;
  for (std::size_t j = 1; j <= n; ++j) c[n - j] = (j % 2 == 0 ? 1.0 : -1.0) * coeffs[j - 1](zeta);
  return ComplexPolynomial(std::move(c));
}

void Correspondence::validate() const {
  if (degree < 1) throw InvalidArgument("Correspondence: degree must be positive");
  if (static_cast<int>(coeffs.size()) != degree)
    throw InvalidArgument("Correspondence: need one coefficient polynomial per degree");
  if (!(domain.radius > 0.0) || !std::isfinite(domain.radius))
    throw InvalidArgument("Correspondence: domain radius must be positive");
}

RootMultiset fiber(const Correspondence& g, Cplx zeta, const Tolerances& tol) {
  require_node(zeta, "fiber");
  RootMultiset roots = poly_roots(g.at(zeta), tol);
  for (const auto& r : roots.entries)
    if (!g.domain.contains(r.value)) throw ProperViolation("fiber: point outside the target domain", zeta, r.value);
  return roots;
}

double caratheodory_distance(const DomainSpec& dom, Cplx p, Cplx q) {
  if (!dom.contains(p) || !dom.contains(q)) throw DomainError("caratheodory_distance: point outside the domain");
  return mobius_distance((p - dom.center) / dom.radius, (q - dom.center) / dom.radius);
}

DomainMetric caratheodory_metric(const DomainSpec& dom) {
  return [dom](Cplx p, Cplx q) { return caratheodory_distance(dom, p, q); };
}

SchwarzProductReport check_schwarz_product(const Correspondence& g, Cplx zeta1, Cplx zeta2, const Tolerances& tol,
                                           const DomainMetric& metric) {
  const DomainMetric d = metric ? metric : caratheodory_metric(g.domain);
  SchwarzProductReport r;
  r.fiber1 = fiber(g, zeta1, tol).expanded();
  r.fiber2 = fiber(g, zeta2, tol).expanded();
  r.term21 = directed_product(r.fiber1, r.fiber2, d);
  r.term12 = directed_product(r.fiber2, r.fiber1, d);
  r.lhs = std::max(r.term12, r.term21);
  r.rhs = mobius_distance(zeta1, zeta2);
  r.slack = r.rhs - r.lhs;
  return r;
}

SchwarzHausdorffReport check_schwarz_hausdorff(const Correspondence& g, Cplx zeta1, Cplx zeta2,
                                               const Tolerances& tol, const DomainMetric& metric) {
  const DomainMetric d = metric ? metric : caratheodory_metric(g.domain);
  SchwarzHausdorffReport r;
  const RootMultiset f1 = fiber(g, zeta1, tol), f2 = fiber(g, zeta2, tol);
  r.support1 = f1.support();
  r.support2 = f2.support();
  r.lhs = hausdorff_distance(r.support1, r.support2, d);
  r.rhs = std::pow(mobius_distance(zeta1, zeta2), 1.0 / g.degree);
  r.slack = r.rhs - r.lhs;
  r.lhs_power = std::pow(r.lhs, g.degree);
  const auto e1 = f1.expanded(), e2 = f2.expanded();
  r.product_bound = std::max(directed_product(e1, e2, d), directed_product(e2, e1, d));
  return r;
}

ProperCertificate validate_properness(const Correspondence& g, const ProperGrid& grid, const Tolerances& tol) {
  if (grid.radial < 1 || grid.angular < 1 || !(grid.max_radius > 0.0 && grid.max_radius < 1.0))
    throw InvalidArgument("validate_properness: invalid grid");
  ProperCertificate cert;
  cert.grid = grid;
  cert.min_distance = std::numeric_limits<double>::infinity();
  auto visit = [&](Cplx z) {
    for (const auto& r : poly_roots(g.at(z), tol).entries) {
      const double d = g.domain.boundary_distance(r.value);
      if (d < cert.min_distance) {
        cert.min_distance = d;
        if (d < grid.margin) {
          cert.z = z;
          cert.w = r.value;
        }
      }
    }
  };
  visit(0.0);
  for (int i = 1; i <= grid.radial; ++i) {
    const double rho = grid.max_radius * i / grid.radial;
    for (int k = 0; k < grid.angular; ++k) visit(std::polar(rho, 2.0 * std::numbers::pi * k / grid.angular));
  }
  cert.proper = cert.min_distance >= grid.margin;
  return cert;
}

}  // namespace specpick
