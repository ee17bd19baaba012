#include <cmath>
#include <numbers>

#include "specpick/conditions.hpp"

namespace specpick {
namespace {

struct Bounds {
  double m, lower, upper;
};

Bounds bounds(int n, Cplx a, Cplx b) {
  const double m = mobius_distance(a, b);
  const double rb = std::abs(b);
  return {m, rb * std::sqrt(m), std::min(rb * std::pow(m, 1.0 / n), std::pow(rb, 0.5 / n) * std::sqrt(m))};
}

Matrix nilpotent_combo(const std::vector<Cplx>& alpha) {
  const auto n = static_cast<Eigen::Index>(alpha.size());
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    out.diagonal(j).setConstant(alpha[static_cast<std::size_t>(j)]);
  return out;
}

}  // namespace

std::vector<ConstraintCheck> example_constraints(int n, Cplx a, Cplx b, const std::vector<Cplx>& beta,
                                                 const Tolerances& tol) {
  const Bounds bd = bounds(n, a, b);
  bool distinct = true, below_b = true, square = true, capped = true, exceeds = false;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const double r = std::abs(beta[i]);
    for (std::size_t j = 0; j < i; ++j)
      distinct = distinct && std::abs(beta[i] * beta[i] - beta[j] * beta[j]) > tol.cluster_tol;
    below_b = below_b && r < std::abs(b);
    square = square && r * r < bd.m;
    if (i >= 1) {
      capped = capped && r <= bd.upper;
      exceeds = exceeds || r > bd.lower;
    }
  }
  return {
      {"beta has n entries", static_cast<int>(beta.size()) == n},
      {"beta_1 = 0", !beta.empty() && beta.front() == Cplx(0.0)},
      {"beta_i^2 pairwise distinct", distinct},
      {"|beta_i| < |b|", below_b},
      {"|beta_i|^2 < M(a,b)", square},
      {"|beta_i| <= min{|b| M(a,b)^(1/n), |b|^(1/2n) M(a,b)^(1/2)} for i >= 2", capped},
      {"|beta_i0| > |b| M(a,b)^(1/2) for some i0 >= 2", exceeds},
  };
}

ExampleData generate_example(int n, Cplx a, Cplx b, std::optional<std::vector<Cplx>> beta,
                             std::optional<std::vector<Cplx>> alpha, const Tolerances& tol) {
  if (n < 4) throw InvalidArgument("generate_example: the example class needs n >= 4");
  if (!in_open_disc(a) || !in_open_disc(b)) throw DomainError("generate_example: a and b must lie in the open disc");
  if (a == Cplx(0.0) || b == Cplx(0.0) || a == b)
    throw InvalidArgument("generate_example: 0, a and b must be distinct");

  ExampleData ex;
  const Bounds bd = bounds(n, a, b);
  ex.lower = bd.lower;
  ex.upper = bd.upper;
  if (!(bd.lower < bd.upper))
    throw ConstraintError("generate_example: beta interval is empty", {"|b| M(a,b)^(1/2) < upper bound"});

  if (beta) {
    ex.beta = *beta;
  } else {
    ex.beta.assign(static_cast<std::size_t>(n), Cplx(0.0));
    for (int i = 2; i <= n; ++i) {
      const double r = bd.lower + (bd.upper - bd.lower) * (i - 1) / n;
      ex.beta[static_cast<std::size_t>(i - 1)] = std::polar(r, 2.0 * std::numbers::pi * (i - 1) / n + 0.5);
    }
  }

  std::vector<std::string> failed;
  if (alpha) {
    ex.alpha = *alpha;
    if (static_cast<int>(ex.alpha.size()) != n) {
      failed.push_back("alpha has n entries");
    } else {
      for (int j = 0; j <= n - 3; ++j)
        if (ex.alpha[static_cast<std::size_t>(j)] != Cplx(0.0)) {
          failed.push_back("alpha_j = 0 for j <= n-3");
          break;
        }
      if (ex.alpha[static_cast<std::size_t>(n - 2)] == Cplx(0.0)) failed.push_back("alpha_{n-2} != 0");
    }
  } else {
    ex.alpha.assign(static_cast<std::size_t>(n), Cplx(0.0));
    ex.alpha[static_cast<std::size_t>(n - 2)] = 1.0;
    ex.alpha[static_cast<std::size_t>(n - 1)] = 0.5;
  }

  ex.constraints = example_constraints(n, a, b, ex.beta, tol);
  for (const auto& c : ex.constraints)
    if (!c.passed) failed.push_back(c.name);
  if (!failed.empty()) {
    std::string what = "generate_example: constraints failed:";
    for (const auto& f : failed) what += " [" + f + "]";
    throw ConstraintError(what, failed);
  }

  Matrix bm = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) bm(i, i) = ex.beta[static_cast<std::size_t>(i)];
  ex.data.points = {DataPoint{0.0, Matrix(Matrix::Zero(n, n))}, DataPoint{a, nilpotent_combo(ex.alpha)},
                    DataPoint{b, bm}};
  return ex;
}

}  // namespace specpick
