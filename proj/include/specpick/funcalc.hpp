#pragma once

#include <memory>
#include <variant>

#include "specpick/blaschke.hpp"

namespace specpick {

/// A holomorphic function on the disc with exact jets.
///
/// Built from polynomials and Blaschke products by scaling, precomposition
/// with a disc automorphism and differentiation. Jets come from series
/// arithmetic on the exact representation; nothing is differenced.
class HoloFn {
 public:
  struct Scaled;
  struct Composed;
  struct Derived;
  struct Node;

  static HoloFn identity() { return polynomial(ComplexPolynomial{0.0, 1.0}); }
  static HoloFn polynomial(ComplexPolynomial p);
  static HoloFn blaschke(BlaschkeProduct b);

  /// c * f
  HoloFn scaled(Cplx c) const;
  /// f o psi_a with psi_a(z) = (z - a) / (1 - conj(a) z)
  HoloFn composed(Cplx a) const;
  /// f^(k)
  HoloFn derivative(int k = 1) const;

  Cplx operator()(Cplx z) const;
  /// f^(j)(z) / j! for j = 0..order; z must lie in the open disc.
  series::Series taylor(Cplx z, int order) const;
  /// f^(j)(z)
  Cplx derivative_at(Cplx z, int j) const;

  /// Holds a std::variant of ComplexPolynomial, BlaschkeProduct, Scaled, Composed, Derived.
  const Node& node() const { return *node_; }

 private:
  explicit HoloFn(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct HoloFn::Scaled {
  HoloFn fn;
  Cplx c;
};
struct HoloFn::Composed {
  HoloFn fn;
  Cplx a;
};
struct HoloFn::Derived {
  HoloFn fn;
  int order;
};
struct HoloFn::Node {
  std::variant<ComplexPolynomial, BlaschkeProduct, Scaled, Composed, Derived> value;
};

/// Polynomial of degree < sum m(lambda) whose jets of order m(lambda) - 1 agree
/// with f at every lambda (confluent Newton divided differences). Throws
/// IllConditioned when two distinct nodes are closer than 10 * cluster_tol.
ComplexPolynomial hermite_interpolant(const HoloFn& f, const SpectralData& data, const Tolerances& tol = {});

/// f(A) = p(A) for the Hermite interpolant p of f on the minimal polynomial of A.
/// A polynomial f is evaluated directly, so the identity returns A exactly.
Matrix apply(const HoloFn& f, const Matrix& a, const Tolerances& tol = {});
/// Same, with the spectral data read exactly from the Jordan structure.
Matrix apply(const HoloFn& f, const JordanSpec& a, const Tolerances& tol = {});

/// Minimal polynomial of sum alpha_j N^j for the n x n nilpotent N, n = alphas.size().
SpectralData nilpotent_combo_minpoly(const std::vector<Cplx>& alphas, const Tolerances& tol = {});

/// Least j with |g^(j)(a)| / j! * rho^j above drop_tol times the largest such
/// term, rho = (1 - |a|) / 2. Throws InvalidArgument when no term is nonzero
/// up to `order_cap`.
int ord_of_vanishing(const HoloFn& g, Cplx a, const Tolerances& tol = {});

/// Minimal polynomial of f(A) predicted from that of A: images f(lambda) are
/// grouped at cluster_tol and carry the exponent
/// max floor((m - 1) / (ord_lambda f' + 1)) + 1 over each fibre.
SpectralData predicted_minpoly(const HoloFn& f, const SpectralData& data, const Tolerances& tol = {});

}  // namespace specpick
