#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace specpick {

using Cplx = std::complex<double>;

/// Dense univariate polynomial, coefficients stored lowest degree first.
///
/// The zero polynomial has no coefficients and degree -1. Trailing zero
/// coefficients are always trimmed, so `leading()` is nonzero whenever the
/// polynomial is.
template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(0.0); }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(0.0); }

  static Polynomial constant(Scalar c) { return Polynomial({c}); }
  static Polynomial monomial(int degree, Scalar c = Scalar(1)) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  /// prod (t - r) over the given roots.
  template <typename Range>
  static Polynomial from_roots(const Range& roots) {
    std::vector<Scalar> v{Scalar(1)};
    for (const auto& r : roots) {
      std::vector<Scalar> next(v.size() + 1, Scalar(0));
      for (std::size_t i = 0; i < v.size(); ++i) {
        next[i + 1] += v[i];
        next[i] -= Scalar(r) * v[i];
      }
      v = std::move(next);
    }
    return Polynomial(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  Scalar operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Scalar(0);
  }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  /// Horner evaluation.
  template <typename T>
  auto operator()(const T& t) const {
    using R = decltype(Scalar(0) * t);
    R acc = R(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Polynomial derivative(int order = 1) const {
    std::vector<Scalar> v = c_;
    for (int k = 0; k < order && !v.empty(); ++k) {
      std::vector<Scalar> d(v.size() > 1 ? v.size() - 1 : 0);
      for (std::size_t i = 1; i < v.size(); ++i) d[i - 1] = v[i] * static_cast<double>(i);
      v = std::move(d);
    }
    return Polynomial(std::move(v));
  }

  /// Coefficients of h -> p(a + h), i.e. the Taylor coefficients of p at a.
  std::vector<Scalar> taylor_coefficients(Scalar a) const {
    std::vector<Scalar> v = c_;
    const std::size_t n = v.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
      for (std::size_t i = n - 1; i > k; --i) v[i - 1] += a * v[i];
    return v;
  }

  /// Sum of coefficient moduli.
  double norm1() const {
    double s = 0.0;
    for (const auto& c : c_) s += std::abs(c);
    return s;
  }

  Polynomial monic() const {
    if (c_.empty()) return *this;
    std::vector<Scalar> v = c_;
    const Scalar lead = v.back();
    for (auto& c : v) c /= lead;
    v.back() = Scalar(1);
    return Polynomial(std::move(v));
  }

  /// Drops trailing coefficients with modulus <= tol * max modulus.
  Polynomial trimmed(double tol) const {
    Polynomial p = *this;
    p.trim(tol);
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Scalar> v = a.c_;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(Scalar s, const Polynomial& a) {
    std::vector<Scalar> v = a.c_;
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
  }

 private:
  void trim(double tol) {
    double scale = 0.0;
    for (const auto& c : c_) scale = std::max(scale, static_cast<double>(std::abs(c)));
    while (!c_.empty() && static_cast<double>(std::abs(c_.back())) <= tol * scale) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using ComplexPolynomial = Polynomial<Cplx>;

/// Numerator over denominator; coprimality is not enforced.
struct RationalFunction {
  ComplexPolynomial numerator;
  ComplexPolynomial denominator;

  Cplx operator()(Cplx t) const { return numerator(t) / denominator(t); }
};

}  // namespace specpick
