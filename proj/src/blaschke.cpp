#include "specpick/blaschke.hpp"

#include "specpick/funcalc.hpp"

namespace specpick {

BlaschkeProduct::BlaschkeProduct(std::vector<BlaschkeFactor> factors) {
  for (const auto& f : factors) {
    if (!in_open_disc(f.zero)) throw DomainError("BlaschkeProduct: zero outside the open unit disc");
    if (f.multiplicity < 1) throw InvalidArgument("BlaschkeProduct: multiplicity must be positive");
    auto same = std::find_if(factors_.begin(), factors_.end(), [&](const BlaschkeFactor& g) { return g.zero == f.zero; });
    if (same != factors_.end())
      same->multiplicity += f.multiplicity;
    else
      factors_.push_back(f);
  }
}

int BlaschkeProduct::degree() const noexcept {
  int d = 0;
  for (const auto& f : factors_) d += f.multiplicity;
  return d;
}

Cplx BlaschkeProduct::operator()(Cplx t) const {
  Cplx v = 1.0;
  for (const auto& f : factors_) {
    const Cplx phi = (t - f.zero) / (1.0 - std::conj(f.zero) * t);
    for (int k = 0; k < f.multiplicity; ++k) v *= phi;
  }
  return v;
}

series::Series BlaschkeProduct::taylor(Cplx a, int order) const {
  const auto len = static_cast<std::size_t>(order) + 1;
  series::Series out(len, Cplx(0.0));
  out[0] = 1.0;
  for (const auto& f : factors_) {
    // (a - lambda + h) / (d - conj(lambda) h) = ((a - lambda) + h) / d * sum (r h)^k, r = conj(lambda) / d
    const Cplx d = 1.0 - std::conj(f.zero) * a;
    const Cplx r = std::conj(f.zero) / d;
    series::Series phi(len);
    phi[0] = (a - f.zero) / d;
    Cplx rk = 1.0;
    for (std::size_t k = 1; k < len; ++k) {
      phi[k] = ((a - f.zero) * rk * r + rk) / d;
      rk *= r;
    }
    out = series::multiply(out, series::power(phi, f.multiplicity, order), order);
  }
  return out;
}

BlaschkeProduct minimal_blaschke(const SpectralData& data) {
  std::vector<BlaschkeFactor> f;
  for (const auto& e : data.entries) {
    if (!in_open_disc(e.eigenvalue)) throw DomainError("minimal_blaschke: eigenvalue outside the open unit disc");
    f.push_back({e.eigenvalue, e.exponent});
  }
  return BlaschkeProduct(std::move(f));
}

RationalFunction as_rational(const BlaschkeProduct& b) {
  ComplexPolynomial p = ComplexPolynomial::constant(1.0), q = ComplexPolynomial::constant(1.0);
  for (const auto& f : b.factors())
    for (int k = 0; k < f.multiplicity; ++k) {
      p = p * ComplexPolynomial{-f.zero, 1.0};
      q = q * ComplexPolynomial{1.0, -std::conj(f.zero)};
    }
  return {p, q};
}

RootMultiset preimage(const BlaschkeProduct& b, Cplx w, const Tolerances& tol) {
  if (!(std::abs(w) <= 1.0)) throw DomainError("preimage: value outside the closed unit disc");
  if (b.degree() == 0) throw InvalidArgument("preimage: constant Blaschke product");
  const RationalFunction r = as_rational(b);
  return poly_roots(r.numerator - w * r.denominator, tol);
}

Matrix apply_to_matrix(const BlaschkeProduct& b, const Matrix& a, const Tolerances& tol) {
  return apply(HoloFn::blaschke(b), a, tol);
}

}  // namespace specpick
