#include "doctest.h"
#include "specpick/blaschke.hpp"
#include "specpick/funcalc.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace specpick;
using namespace specpick::testing;

namespace {

Cplx boundary(double theta) { return std::polar(1.0, theta); }

}  // namespace

TEST_CASE("minimal_blaschke: factors are the spectral data verbatim") {
  const BlaschkeProduct b1 = minimal_blaschke({{{0.0, 1}}});
  const BlaschkeProduct b2 = minimal_blaschke({{{0.0, 2}}});
  for (Cplx t : {Cplx(0.3, 0.1), Cplx(-0.7, 0.2), Cplx(0.0, -0.9)}) {
    CHECK(std::abs(b1(t) - t) < 1e-15);
    CHECK(std::abs(b2(t) - t * t) < 1e-15);
  }

  const BlaschkeProduct b3 = minimal_blaschke({{{0.5, 1}, {-0.3, 2}}});
  CHECK(b3.degree() == 3);
  REQUIRE(b3.factors().size() == 2);
  CHECK(b3.factors()[1].multiplicity == 2);
  for (int k = 0; k < 16; ++k) CHECK(std::abs(std::abs(b3(boundary(0.4 * k))) - 1.0) < 1e-12);

  CHECK_THROWS_AS(minimal_blaschke({{{1.0, 1}}}), DomainError);
  CHECK_THROWS_AS(minimal_blaschke({{{Cplx(0.0, -1.2), 2}}}), DomainError);
}

TEST_CASE("BlaschkeProduct: construction rules") {
  CHECK(BlaschkeProduct().degree() == 0);
  CHECK(BlaschkeProduct()(Cplx(0.3)) == Cplx(1.0));
  CHECK_THROWS_AS(BlaschkeProduct({{0.2, 0}}), InvalidArgument);
  const BlaschkeProduct merged({{0.2, 1}, {0.2, 2}});
  REQUIRE(merged.factors().size() == 1);
  CHECK(merged.factors()[0].multiplicity == 3);
}

TEST_CASE("as_rational: expanded numerator and denominator") {
  const RationalFunction id = as_rational(BlaschkeProduct({{0.0, 1}}));
  CHECK(id.numerator.degree() == 1);
  CHECK(id.numerator[1] == Cplx(1.0));
  CHECK(id.numerator[0] == Cplx(0.0));
  CHECK(id.denominator.degree() == 0);
  CHECK(id.denominator[0] == Cplx(1.0));

  const Cplx lambda(0.3, -0.4);
  const RationalFunction one = as_rational(BlaschkeProduct({{lambda, 1}}));
  CHECK(one.numerator[0] == -lambda);
  CHECK(one.denominator[1] == -std::conj(lambda));

  const BlaschkeProduct b({{0.5, 2}});
  const RationalFunction r = as_rational(b);
  CHECK(r.numerator.degree() == 2);
  CHECK(r.denominator[0] == Cplx(1.0));
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const Cplx t = random_in_disc(rng, 0.95);
    const Cplx direct = (t - 0.5) * (t - 0.5) / ((1.0 - 0.5 * t) * (1.0 - 0.5 * t));
    CHECK(std::abs(r(t) - direct) < 1e-12);
  }
}

TEST_CASE("preimage: worked fibres") {
  const BlaschkeProduct id({{0.0, 1}});
  const auto a = preimage(id, Cplx(0.3, 0.2));
  REQUIRE(a.entries.size() == 1);
  CHECK(std::abs(a.entries[0].value - Cplx(0.3, 0.2)) < 1e-14);

  const BlaschkeProduct sq({{0.0, 2}});
  const auto b = preimage(sq, 0.25);
  REQUIRE(b.entries.size() == 2);
  CHECK(std::abs(b.entries[0].value + 0.5) < 1e-12);
  CHECK(std::abs(b.entries[1].value - 0.5) < 1e-12);

  const auto c = preimage(sq, 0.0);
  REQUIRE(c.entries.size() == 1);
  CHECK(c.entries[0].multiplicity == 2);
  CHECK(std::abs(c.entries[0].value) < 1e-14);

  CHECK_THROWS_AS(preimage(sq, 1.5), DomainError);
  CHECK_THROWS_AS(preimage(BlaschkeProduct(), 0.5), InvalidArgument);
}

TEST_CASE("apply_to_matrix: annihilation, identity, squaring") {
  const Matrix a = jordan_to_matrix({{{0.3, {1, 2}}, {Cplx(-0.2, 0.5), {1}}}});
  const BlaschkeProduct b = minimal_blaschke(minimal_polynomial(a));
  CHECK(apply_to_matrix(b, a).norm() < 1e-9);

  CHECK((apply_to_matrix(BlaschkeProduct({{0.0, 1}}), a) - a).norm() == 0.0);

  const Matrix j = jordan_to_matrix({{{0.4, {2}}}});
  const auto s = eigen_multiset(apply_to_matrix(BlaschkeProduct({{0.0, 2}}), j));
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0].multiplicity == 2);
  CHECK(std::abs(s.entries[0].value - 0.16) < 1e-12);

  Matrix outside = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(apply_to_matrix(b, outside), DomainError);
}

TEST_CASE("taylor agrees with a Cauchy-integral oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const BlaschkeProduct b = random_blaschke(rng, 6);
    const Cplx z = random_in_disc(rng, 0.8);
    const double r = 0.5 * (1.0 - std::abs(z));
    const int order = 6;
    const auto got = b.taylor(z, order);
    const auto want = cauchy_jet([&](Cplx t) { return b(t); }, z, order, r);
    for (int j = 0; j <= order; ++j)
      CHECK(std::abs(got[static_cast<std::size_t>(j)] - want[static_cast<std::size_t>(j)]) <=
            1e-9 * std::pow(r, -j));
  }
}

TEST_CASE("property: unimodular on the boundary") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const BlaschkeProduct b = random_blaschke(rng, 6, 0.95);
    for (int k = 0; k < 64; ++k) CHECK(std::abs(std::abs(b(boundary(2.0 * M_PI * k / 64))) - 1.0) < 1e-10);
  }
}

TEST_CASE("property: preimages conserve the degree") {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const BlaschkeProduct b = random_blaschke(rng, 6);
    const Cplx w = random_in_disc(rng, 0.99);
    const auto f = preimage(b, w);
    CHECK(f.total_multiplicity() == b.degree());
    for (const auto& e : f.entries) {
      CHECK(std::abs(e.value) < 1.0);
      CHECK(std::abs(b(e.value) - w) < 1e-6);
    }
  }
}

TEST_CASE("property: the minimal Blaschke product annihilates its matrix") {
  Rng rng(37);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const JordanSpec spec = random_jordan_spec(rng, 6, 0.8, 3);
    const Matrix s = random_similarity(rng, spec.dimension());
    const Matrix a = s * jordan_to_matrix(spec) * s.inverse();
    const double scale = std::max(1.0, operator_norm(a));
    SpectralData data;
    try {
      data = minimal_polynomial(a);
    } catch (const IllConditioned&) {
      continue;
    }
    CHECK(operator_norm(apply_to_matrix(minimal_blaschke(data), a)) <= 1e-8 * scale);
    ++checked;
  }
  CHECK(checked >= 150);
}

TEST_CASE("property: B' vanishes to order m - 1 at an m-fold zero") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const BlaschkeProduct b = random_blaschke(rng, 6);
    const HoloFn db = HoloFn::blaschke(b).derivative();
    for (const auto& f : b.factors())
      if (f.multiplicity >= 2) CHECK(ord_of_vanishing(db, f.zero) == f.multiplicity - 1);
  }
}
