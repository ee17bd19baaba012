#pragma once

#include <vector>

#include "specpick/matrixspec.hpp"
#include "specpick/series.hpp"

namespace specpick {

struct BlaschkeFactor {
  Cplx zero;
  int multiplicity = 1;
};

/// Finite Blaschke product prod ((t - lambda) / (1 - conj(lambda) t))^m,
/// without a unimodular constant. The empty product is the constant 1.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  /// Zeros must lie in the open disc, multiplicities must be positive.
  explicit BlaschkeProduct(std::vector<BlaschkeFactor> factors);

  const std::vector<BlaschkeFactor>& factors() const noexcept { return factors_; }
  int degree() const noexcept;
  Cplx operator()(Cplx t) const;
  /// Taylor coefficients B^(j)(a) / j! for j = 0..order.
  series::Series taylor(Cplx a, int order) const;

 private:
  std::vector<BlaschkeFactor> factors_;
};

/// B_A with zeros the eigenvalues of A and multiplicities m(lambda).
BlaschkeProduct minimal_blaschke(const SpectralData& data);

/// Expanded P / Q; P has degree d and Q(0) = 1.
RationalFunction as_rational(const BlaschkeProduct& b);

/// Solutions of B(t) = w with multiplicity, as the roots of P - w Q.
RootMultiset preimage(const BlaschkeProduct& b, Cplx w, const Tolerances& tol = {});

/// B(A) through the functional calculus.
Matrix apply_to_matrix(const BlaschkeProduct& b, const Matrix& a, const Tolerances& tol = {});

}  // namespace specpick
