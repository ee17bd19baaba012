#include <map>

#include "doctest.h"
#include "specpick/funcalc.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace specpick;
using namespace specpick::testing;

namespace {

Matrix nilpotent(int n) { return jordan_to_matrix({{{0.0, {n}}}}); }

bool same_data(const SpectralData& want, const SpectralData& got, double tol) {
  if (want.entries.size() != got.entries.size()) return false;
  for (const auto& e : want.entries) {
    const SpectralEntry* g = got.find(e.eigenvalue, tol);
    if (!g || g->exponent != e.exponent) return false;
  }
  return true;
}

HoloFn random_self_map(Rng& rng) {
  if (uniform_int(rng, 0, 1) == 0) return HoloFn::blaschke(random_blaschke(rng, 4));
  return HoloFn::polynomial(random_self_map_polynomial(rng, uniform_int(rng, 1, 5)));
}

}  // namespace

TEST_CASE("hermite_interpolant: worked jets") {
  const HoloFn b = HoloFn::blaschke(BlaschkeProduct({{0.3, 2}}));
  const Cplx lambda(-0.2, 0.4);
  const ComplexPolynomial c = hermite_interpolant(b, {{{lambda, 1}}});
  CHECK(c.degree() == 0);
  CHECK(std::abs(c[0] - b(lambda)) < 1e-15);

  const ComplexPolynomial id = hermite_interpolant(HoloFn::identity(), {{{0.1, 2}, {Cplx(0.0, 0.5), 1}}});
  REQUIRE(id.degree() == 1);
  CHECK(std::abs(id[0]) < 1e-15);
  CHECK(std::abs(id[1] - 1.0) < 1e-15);

  // Jets (0, 0, 2) at 0 force t^2 exactly.
  const HoloFn sq = HoloFn::polynomial(ComplexPolynomial::monomial(2));
  const ComplexPolynomial p = hermite_interpolant(sq, {{{0.0, 3}}});
  REQUIRE(p.degree() == 2);
  CHECK(p[0] == Cplx(0.0));
  CHECK(p[1] == Cplx(0.0));
  CHECK(p[2] == Cplx(1.0));

  CHECK_THROWS_AS(hermite_interpolant(sq, {{{0.2, 1}, {0.2 + 1e-7, 1}}}), IllConditioned);
  CHECK_THROWS_AS(hermite_interpolant(sq, {{{1.0, 1}}}), DomainError);
  CHECK_THROWS_AS(hermite_interpolant(sq, {}), InvalidArgument);
}

TEST_CASE("hermite_interpolant matches every prescribed jet") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const JordanSpec spec = random_jordan_spec(rng, 8, 0.8, 4, 0.2);
    const HoloFn f = random_self_map(rng);
    const SpectralData data = spec.spectral_data();
    const ComplexPolynomial p = hermite_interpolant(f, data);
    CHECK(p.degree() < data.degree());
    for (const auto& e : data.entries) {
      const auto want = f.taylor(e.eigenvalue, e.exponent - 1);
      auto got = p.taylor_coefficients(e.eigenvalue);
      got.resize(static_cast<std::size_t>(e.exponent), Cplx(0.0));
      for (int j = 0; j < e.exponent; ++j)
        CHECK(std::abs(got[static_cast<std::size_t>(j)] - want[static_cast<std::size_t>(j)]) <
              1e-7 * (1.0 + std::abs(want[static_cast<std::size_t>(j)])));
    }
  }
}

TEST_CASE("apply: worked matrices") {
  const Matrix a = jordan_to_matrix({{{0.3, {1, 2}}, {Cplx(-0.2, 0.5), {1}}}});
  CHECK((specpick::apply(HoloFn::identity(), a) - a).norm() == 0.0);

  const Matrix n = nilpotent(3);
  CHECK((specpick::apply(HoloFn::polynomial(ComplexPolynomial::monomial(2)), n) - n * n).norm() == 0.0);

  // B(t) = t (t - 0.5) / (1 - 0.5 t) vanishes on the spectrum {0, 0.5}.
  Matrix d = Matrix::Zero(2, 2);
  d(1, 1) = 0.5;
  d(0, 1) = 0.7;
  const HoloFn b = HoloFn::blaschke(BlaschkeProduct({{0.0, 1}, {0.5, 1}}));
  CHECK(specpick::apply(b, d).norm() < 1e-12);
  for (Cplx t : {Cplx(0.1, 0.2), Cplx(-0.6, 0.1)}) CHECK(std::abs(b(t) - t * (t - 0.5) / (1.0 - 0.5 * t)) < 1e-15);

  CHECK_THROWS_AS(specpick::apply(b, Matrix::Identity(2, 2)), DomainError);
  CHECK_THROWS_AS(specpick::apply(b, JordanSpec{{{1.5, {1}}}}), DomainError);
}

TEST_CASE("apply on a JordanSpec agrees with apply on its matrix") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const JordanSpec spec = random_jordan_spec(rng, 6, 0.8, 3);
    const HoloFn f = random_self_map(rng);
    const Matrix exact = specpick::apply(f, spec);
    CHECK((specpick::apply(f, jordan_to_matrix(spec)) - exact).norm() <= 1e-9 * std::max(1.0, exact.norm()));
  }
}

TEST_CASE("nilpotent_combo_minpoly: least nonzero index") {
  const Cplx a0(0.2, -0.1);
  const auto c1 = nilpotent_combo_minpoly({a0, 0.0, 0.0, 0.0});
  REQUIRE(c1.entries.size() == 1);
  CHECK(c1.entries[0].eigenvalue == a0);
  CHECK(c1.entries[0].exponent == 1);

  const auto c2 = nilpotent_combo_minpoly({0.0, 0.0, 0.3, 0.7});
  CHECK(c2.entries[0].exponent == 2);

  const std::vector<Cplx> alphas{0.0, 0.4, -0.2, 0.1, 0.5};
  const auto c3 = nilpotent_combo_minpoly(alphas);
  CHECK(c3.entries[0].exponent == 5);
  // Cross-check on the explicit matrix sum alpha_j N^j.
  Matrix a = Matrix::Zero(5, 5), power = Matrix::Identity(5, 5);
  for (const auto& x : alphas) {
    a += x * power;
    power = power * nilpotent(5);
  }
  const auto m = minimal_polynomial(a);
  REQUIRE(m.entries.size() == 1);
  CHECK(m.entries[0].exponent == 5);

  CHECK_THROWS_AS(nilpotent_combo_minpoly({0.5}), InvalidArgument);
}

TEST_CASE("nilpotent_combo_minpoly agrees with minimal_polynomial") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 2, 8);
    const int l = uniform_int(rng, 1, n);
    std::vector<Cplx> alphas(static_cast<std::size_t>(n), Cplx(0.0));
    alphas[0] = random_in_disc(rng, 0.8);
    for (int j = l; j < n; ++j) alphas[static_cast<std::size_t>(j)] = random_in_disc(rng, 1.0);
    if (l < n) alphas[static_cast<std::size_t>(l)] = std::polar(uniform(rng, 0.3, 1.0), uniform(rng, 0.0, 6.3));
    Matrix a = Matrix::Zero(n, n), power = Matrix::Identity(n, n);
    for (const auto& x : alphas) {
      a += x * power;
      power = power * nilpotent(n);
    }
    CHECK(same_data(nilpotent_combo_minpoly(alphas), minimal_polynomial(a), 1e-9));
  }
}

TEST_CASE("ord_of_vanishing: worked orders") {
  const HoloFn sq = HoloFn::polynomial(ComplexPolynomial::monomial(2));
  CHECK(ord_of_vanishing(sq, 0.0) == 2);
  CHECK(ord_of_vanishing(sq, 0.3) == 0);
  CHECK(ord_of_vanishing(HoloFn::blaschke(BlaschkeProduct({{0.0, 2}})).derivative(), 0.0) == 1);
  CHECK(ord_of_vanishing(HoloFn::polynomial(ComplexPolynomial{1.0, -1.0}).derivative(), 0.1) == 0);
  CHECK_THROWS_AS(ord_of_vanishing(HoloFn::polynomial(ComplexPolynomial{0.5}).derivative(), 0.2), InvalidArgument);
  CHECK_THROWS_AS(ord_of_vanishing(sq, 1.0), DomainError);
}

TEST_CASE("predicted_minpoly: worked data") {
  const SpectralData data{{{0.2, 2}, {Cplx(-0.3, 0.3), 1}}};
  CHECK(same_data(data, predicted_minpoly(HoloFn::identity(), data), 0.0));

  const HoloFn sq = HoloFn::polynomial(ComplexPolynomial::monomial(2));
  const SpectralData n3{{{0.0, 3}}};
  const auto p = predicted_minpoly(sq, n3);
  CHECK(same_data({{{0.0, 2}}}, p, 0.0));
  CHECK(same_data(p, minimal_polynomial(nilpotent(3) * nilpotent(3)), 1e-12));

  const HoloFn b1 = HoloFn::blaschke(BlaschkeProduct({{0.0, 1}}));
  CHECK(same_data({{{0.0, 2}}}, predicted_minpoly(b1, {{{0.0, 2}}}), 0.0));

  // t^2 identifies +-0.5 into one fibre with exponent max(2, 1).
  const auto fibre = predicted_minpoly(sq, {{{0.5, 2}, {-0.5, 1}}});
  CHECK(same_data({{{0.25, 2}}}, fibre, 1e-15));

  Tolerances strict;
  strict.strict = true;
  const SpectralData close{{{0.5, 1}, {-0.5 - 3e-7, 1}}};
  CHECK_THROWS_AS(predicted_minpoly(sq, close, strict), AmbiguityError);
  CHECK(predicted_minpoly(sq, close).entries.size() == 2);
}

TEST_CASE("HoloFn jets agree with a Cauchy-integral oracle") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    HoloFn f = random_self_map(rng);
    switch (uniform_int(rng, 0, 3)) {
      case 0: break;
      case 1: f = f.scaled(random_in_disc(rng, 1.0)); break;
      case 2: f = f.composed(random_in_disc(rng, 0.6)); break;
      default: f = f.derivative(uniform_int(rng, 1, 2)); break;
    }
    const Cplx z = random_in_disc(rng, 0.6);
    const double r = 0.5 * (1.0 - std::abs(z));
    constexpr int kOrder = 5;
    const auto got = f.taylor(z, kOrder);
    const auto want = cauchy_jet([&](Cplx t) { return f(t); }, z, kOrder, r);
    double size = 1.0;
    for (const auto& w : want) size = std::max(size, std::abs(w));
    for (int j = 0; j <= kOrder; ++j)
      CHECK(std::abs(got[static_cast<std::size_t>(j)] - want[static_cast<std::size_t>(j)]) <=
            1e-9 * size * std::pow(r, -j));
    CHECK(std::abs(f(z) - got[0]) <= 1e-12 * size);
  }
}

TEST_CASE("property: oracle equivalence of predicted and computed minimal polynomials") {
  Rng rng(101);
  std::map<std::string, int> nontrivial;
  for (int trial = 0; trial < 400; ++trial) {
    const OracleCase c = random_oracle_case(rng, 8);
    const SpectralData data = c.spec.spectral_data();
    const SpectralData want = predicted_minpoly(c.f, data);
    const SpectralData got = minimal_polynomial(specpick::apply(c.f, c.spec));
    CHECK_MESSAGE(same_data(want, got, 1e-6), c.kind);
    if (want.degree() != data.degree()) ++nontrivial[c.kind];
  }
  CHECK(nontrivial["blaschke-critical"] > 30);
  CHECK(nontrivial["polynomial-critical"] > 30);
  CHECK(nontrivial["shared-fibre"] > 30);
}

TEST_CASE("property: spectral mapping") {
  Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const OracleCase c = random_oracle_case(rng, 8, 0.8, 0.05);
    std::vector<std::pair<Cplx, int>> want;
    for (const auto& b : c.spec.blocks) {
      int size = 0;
      for (int s : b.sizes) size += s;
      const Cplx v = c.f(b.eigenvalue);
      auto it = std::find_if(want.begin(), want.end(), [&](const auto& w) { return std::abs(w.first - v) < 1e-9; });
      if (it == want.end())
        want.push_back({v, size});
      else
        it->second += size;
    }
    const RootMultiset got = eigen_multiset(specpick::apply(c.f, c.spec));
    CHECK(got.total_multiplicity() == c.spec.dimension());
    REQUIRE_MESSAGE(got.entries.size() == want.size(), c.kind);
    for (const auto& [v, m] : want) {
      const auto it = std::find_if(got.entries.begin(), got.entries.end(),
                                   [&](const Root& r) { return std::abs(r.value - v) < 1e-6; });
      REQUIRE(it != got.entries.end());
      CHECK(it->multiplicity == m);
    }
  }
}

TEST_CASE("property: homomorphism on polynomials") {
  Rng rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    const JordanSpec spec = random_jordan_spec(rng, 6, 0.8, 3, 0.1);
    const Matrix s = random_similarity(rng, spec.dimension(), 10.0);
    const Matrix a = s * jordan_to_matrix(spec) * s.inverse();
    const ComplexPolynomial p = random_polynomial(rng, uniform_int(rng, 0, 5));
    const ComplexPolynomial q = random_polynomial(rng, uniform_int(rng, 0, 5));
    const Matrix fp = specpick::apply(HoloFn::polynomial(p), a), fq = specpick::apply(HoloFn::polynomial(q), a);
    CHECK((specpick::apply(HoloFn::polynomial(p + q), a) - (fp + fq)).norm() < 1e-9);
    CHECK((specpick::apply(HoloFn::polynomial(p * q), a) - fp * fq).norm() < 1e-9);
  }
}

TEST_CASE("property: exponent of f(J_n(lambda))") {
  Rng rng(109);
  for (int trial = 0; trial < 300; ++trial) {
    const OracleCase c = random_oracle_case(rng, 8);
    const JordanBlock& block = c.spec.blocks.front();
    const int n = block.sizes.back();
    const JordanSpec single{{{block.eigenvalue, {n}}}};
    const int ord = ord_of_vanishing(c.f.derivative(), block.eigenvalue);
    const auto got = minimal_polynomial(specpick::apply(c.f, single));
    REQUIRE(got.entries.size() == 1);
    CHECK(got.entries[0].exponent == (n - 1) / (ord + 1) + 1);

    // Direct sums at one eigenvalue follow the largest block.
    if (block.sizes.size() > 1) {
      const auto sum = minimal_polynomial(specpick::apply(c.f, JordanSpec{{block}}));
      REQUIRE(sum.entries.size() == 1);
      CHECK(sum.entries[0].exponent == got.entries[0].exponent);
    }
  }
}
