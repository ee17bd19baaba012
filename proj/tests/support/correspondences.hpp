#pragma once

#include "specpick/correspondence.hpp"
#include "support/generators.hpp"

namespace specpick::testing {

inline Correspondence graph_of(const ComplexPolynomial& f, DomainSpec dom = {}) { return {1, {f}, dom}; }

/// Random coefficients of degree <= 3; the target disc is fitted around the
/// fibres over the certificate grid with a small random gap, so fibres come
/// close to the boundary.
inline Correspondence random_proper_correspondence(Rng& rng, int max_n = 4) {
  for (;;) {
    Correspondence g;
    g.degree = uniform_int(rng, 1, max_n);
    for (int j = 0; j < g.degree; ++j)
      g.coeffs.push_back(uniform(rng, 0.1, 1.0) * random_polynomial(rng, uniform_int(rng, 0, 3)));
    g.domain = {0.0, 1e6};
    const double rho = g.domain.radius - validate_properness(g).min_distance;
    g.domain.center = random_in_disc(rng, 0.2 * rho);
    g.domain.radius = std::abs(g.domain.center) + rho + rho * uniform(rng, 0.005, 0.2) + 2e-3;
    if (validate_properness(g).proper) return g;
  }
}

}  // namespace specpick::testing
