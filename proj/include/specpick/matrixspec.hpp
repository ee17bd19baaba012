#pragma once

#include <Eigen/Dense>
#include <vector>

#include "specpick/polyalg.hpp"

namespace specpick {

using Matrix = Eigen::MatrixXcd;

/// One eigenvalue of a minimal polynomial and its exponent m(lambda).
struct SpectralEntry {
  Cplx eigenvalue;
  int exponent = 1;
};

/// Minimal-polynomial data: prod (t - lambda)^m(lambda) over distinct eigenvalues.
struct SpectralData {
  std::vector<SpectralEntry> entries;

  /// Degree of the minimal polynomial.
  int degree() const {
    int d = 0;
    for (const auto& e : entries) d += e.exponent;
    return d;
  }
  ComplexPolynomial polynomial() const {
    ComplexPolynomial p = ComplexPolynomial::constant(1.0);
    for (const auto& e : entries)
      for (int k = 0; k < e.exponent; ++k) p = p * ComplexPolynomial{-e.eigenvalue, 1.0};
    return p;
  }
  /// Entry whose eigenvalue lies within `tol` of z, or nullptr.
  const SpectralEntry* find(Cplx z, double tol) const {
    for (const auto& e : entries)
      if (std::abs(e.eigenvalue - z) <= tol) return &e;
    return nullptr;
  }
};

struct JordanBlock {
  Cplx eigenvalue;
  std::vector<int> sizes;  // non-decreasing
};

/// Jordan decomposition given blockwise; the canonical representative has S = I.
struct JordanSpec {
  std::vector<JordanBlock> blocks;

  int dimension() const {
    int n = 0;
    for (const auto& b : blocks)
      for (int s : b.sizes) n += s;
    return n;
  }
  /// Minimal-polynomial data read off the block sizes.
  SpectralData spectral_data() const {
    SpectralData d;
    for (const auto& b : blocks) d.entries.push_back({b.eigenvalue, *std::max_element(b.sizes.begin(), b.sizes.end())});
    return d;
  }
  /// Throws InvalidArgument on repeated eigenvalues, empty or non-positive sizes.
  void validate() const;
};

/// det(tI - A) by the Faddeev-LeVerrier recurrence.
template <typename Derived>
Polynomial<typename Derived::Scalar> characteristic_polynomial(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.rows() != a.cols() || a.rows() < 1) throw InvalidArgument("characteristic_polynomial: matrix must be square");
  const Eigen::Index n = a.rows();
  const Dense A = a;
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Dense m = Dense::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = A * m;
    m.diagonal().array() += c[static_cast<std::size_t>(n - k + 1)];
    c[static_cast<std::size_t>(n - k)] = -(A * m).trace() / static_cast<double>(k);
  }
  return Polynomial<Scalar>(std::move(c));
}

/// Eigenvalues with algebraic multiplicity, as the clustered roots of det(tI - A).
RootMultiset eigen_multiset(const Matrix& a, const Tolerances& tol = {});

/// Distinct eigenvalues with their minimal-polynomial exponents.
///
/// m(lambda) is the index at which rank((A - lambda I)^k) stabilises. Ranks are
/// read on the lambda-block of a reordered Schur form, so neighbouring
/// eigenvalues do not pollute the count; the reported eigenvalue is the block
/// mean. When the Schur diagonal does not match the characteristic polynomial
/// clusters it is clustered directly. Throws IllConditioned when a pivot is
/// within a factor 10 of the threshold `rank_tol`, AmbiguityError when the
/// clustering is borderline.
SpectralData minimal_polynomial(const Matrix& a, const Tolerances& tol = {});

/// Block-diagonal direct sum of Jordan blocks, ones on the superdiagonal.
Matrix jordan_to_matrix(const JordanSpec& spec);

/// Companion matrix: ones on the subdiagonal, last column (-c_0, ..., -c_{k-1}).
Matrix companion(const ComplexPolynomial& p);

/// Minimal polynomial has full degree n.
bool is_nonderogatory(const Matrix& a, const Tolerances& tol = {});

/// Every eigenvalue has modulus < 1 - margin.
bool in_spectral_unit_ball(const Matrix& a, double margin = 0.0, const Tolerances& tol = {});

}  // namespace specpick
