#pragma once

#include "specpick/conditions.hpp"
#include "support/generators.hpp"

namespace specpick::testing {

/// Values at three nodes of an explicit holomorphic F: D -> Omega_n.
struct RealizableCase {
  ThreePointData data;
  const char* kind = "";
};

inline std::array<Cplx, 3> separated_nodes(Rng& rng, double radius = 0.9, double gap = 0.05) {
  for (;;) {
    std::array<Cplx, 3> z{random_in_disc(rng, radius), random_in_disc(rng, radius), random_in_disc(rng, radius)};
    if (std::abs(z[0] - z[1]) > gap && std::abs(z[0] - z[2]) > gap && std::abs(z[1] - z[2]) > gap) return z;
  }
}

// Eigenvalues either equal or at least `gap` apart.
inline bool well_split(const std::vector<Cplx>& v, double gap = 1e-3) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const double d = std::abs(v[i] - v[j]);
      if (d > 0.0 && d < gap) return false;
    }
  return true;
}

/// Kinds: scalar f I, diag(f_i), S diag(f_i) S^-1, f I + g N, and diag of
/// rotated automorphisms, sometimes all equal, which puts the spectra on the
/// Schwarz-lemma boundary.
inline RealizableCase random_realizable_case(Rng& rng) {
  for (;;) {
    RealizableCase c;
    const auto z = separated_nodes(rng);
    const int n = uniform_int(rng, 2, 5);
    const int kind = uniform_int(rng, 0, 4);
    std::vector<BlaschkeProduct> f;
    std::vector<Cplx> rot;
    for (int i = 0; i < n; ++i) {
      f.push_back(kind == 4 ? random_blaschke(rng, 1) : random_blaschke(rng, 3));
      rot.push_back(std::polar(1.0, uniform(rng, 0.0, 6.28)));
    }
    if (kind == 0 || kind == 3) f.assign(static_cast<std::size_t>(n), f.front());
    if (kind == 4 && uniform_int(rng, 0, 1) == 1) {
      f.assign(static_cast<std::size_t>(n), f.front());
      rot.assign(static_cast<std::size_t>(n), rot.front());
    }
    const Matrix s = random_similarity(rng, n, 10.0);
    const ComplexPolynomial g = random_polynomial(rng, 2);
    bool ok = true;
    for (std::size_t j = 0; j < 3 && ok; ++j) {
      std::vector<Cplx> v;
      for (int i = 0; i < n; ++i) v.push_back(rot[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(i)](z[j]));
      ok = well_split(v);
      Matrix w = Matrix::Zero(n, n);
      for (int i = 0; i < n; ++i) w(i, i) = v[static_cast<std::size_t>(i)];
      switch (kind) {
        case 0:
          c.kind = "scalar";
          break;
        case 1:
          c.kind = "diagonal";
          break;
        case 2:
          c.kind = "conjugated";
          w = s * w * s.inverse();
          break;
        case 3:
          c.kind = "jordan";
          ok = ok && std::abs(g(z[j])) > 0.05;
          w.diagonal(1).setConstant(g(z[j]));
          break;
        default:
          c.kind = "automorphism";
      }
      c.data.points[j] = DataPoint{z[j], w};
    }
    if (ok) return c;
  }
}

}  // namespace specpick::testing
