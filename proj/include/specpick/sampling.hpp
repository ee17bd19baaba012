#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "specpick/funcalc.hpp"

namespace specpick::sampling {

using Rng = std::mt19937_64;

/// Uniform in area on D(0, radius).
inline Cplx random_in_disc(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double t = 2.0 * std::numbers::pi * u(rng);
  return std::polar(r, t);
}

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Eigenvalues drawn from D(0, radius), pairwise at least `separation` apart.
inline JordanSpec random_jordan_spec(Rng& rng, int max_n, double radius = 0.8, int max_block = 4,
                                     double separation = 0.05) {
  JordanSpec spec;
  const int n = uniform_int(rng, 1, max_n);
  int used = 0;
  while (used < n) {
    const Cplx lambda = random_in_disc(rng, radius);
    const bool apart = std::all_of(spec.blocks.begin(), spec.blocks.end(),
                                   [&](const JordanBlock& b) { return std::abs(b.eigenvalue - lambda) >= separation; });
    if (!apart) continue;
    JordanBlock block{lambda, {}};
    const int count = uniform_int(rng, 1, 3);
    for (int i = 0; i < count && used < n; ++i) {
      const int size = std::min(uniform_int(rng, 1, max_block), n - used);
      block.sizes.push_back(size);
      used += size;
    }
    std::sort(block.sizes.begin(), block.sizes.end());
    spec.blocks.push_back(std::move(block));
  }
  return spec;
}

/// I + 0.5 G with G complex uniform, resampled until cond_2 <= max_cond.
inline Matrix random_similarity(Rng& rng, Eigen::Index n, double max_cond = 100.0) {
  for (;;) {
    Matrix s = Matrix::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) s(i, j) += 0.5 * Cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
    Eigen::JacobiSVD<Matrix> svd(s);
    const auto& sv = svd.singularValues();
    if (sv(0) <= max_cond * sv(n - 1)) return s;
  }
}

inline ComplexPolynomial random_polynomial(Rng& rng, int degree, double radius = 1.0) {
  std::vector<Cplx> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = random_in_disc(rng, radius);
  if (c.back() == Cplx(0.0)) c.back() = 1.0;
  return ComplexPolynomial(std::move(c));
}

inline BlaschkeProduct random_blaschke(Rng& rng, int max_degree, double radius = 0.9) {
  std::vector<BlaschkeFactor> f;
  int d = uniform_int(rng, 1, max_degree);
  while (d > 0) {
    const int m = uniform_int(rng, 1, d);
    f.push_back({random_in_disc(rng, radius), m});
    d -= m;
  }
  return BlaschkeProduct(std::move(f));
}

/// Polynomial with sum |c_j| < 1, hence a self-map of the disc.
inline ComplexPolynomial random_self_map_polynomial(Rng& rng, int degree) {
  ComplexPolynomial p = random_polynomial(rng, degree);
  return (uniform(rng, 0.5, 0.99) / p.norm1()) * p;
}

/// One draw of the oracle-equivalence distribution: n <= 8, eigenvalues in
/// the 0.8-disc, f a Blaschke product of degree <= 4 or a self-map
/// polynomial of degree <= 5.
struct OracleTrial {
  JordanSpec spec;
  HoloFn f = HoloFn::identity();
};

inline OracleTrial random_oracle_trial(Rng& rng) {
  OracleTrial t;
  t.spec = random_jordan_spec(rng, 8, 0.8, 8);
  if (uniform_int(rng, 0, 1) == 0)
    t.f = HoloFn::blaschke(random_blaschke(rng, 4));
  else
    t.f = HoloFn::polynomial(random_self_map_polynomial(rng, uniform_int(rng, 1, 5)));
  return t;
}

}  // namespace specpick::sampling
