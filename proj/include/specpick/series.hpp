#pragma once

#include <vector>

#include "specpick/polynomial.hpp"

/// Truncated power series in h, coefficients lowest order first.
namespace specpick::series {

using Series = std::vector<Cplx>;

inline Series multiply(const Series& a, const Series& b, int order) {
  Series out(static_cast<std::size_t>(order) + 1, Cplx(0.0));
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i] == Cplx(0.0)) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Series power(const Series& a, int m, int order) {
  Series out(static_cast<std::size_t>(order) + 1, Cplx(0.0));
  out[0] = 1.0;
  for (int k = 0; k < m; ++k) out = multiply(out, a, order);
  return out;
}

/// outer(inner(h) - inner(0)), where `outer` is expanded about inner(0).
inline Series compose(const Series& outer, const Series& inner, int order) {
  Series shift = inner;
  shift.resize(static_cast<std::size_t>(order) + 1, Cplx(0.0));
  shift[0] = 0.0;
  Series out(static_cast<std::size_t>(order) + 1, Cplx(0.0));
  Series p(static_cast<std::size_t>(order) + 1, Cplx(0.0));
  p[0] = 1.0;
  // shift has no constant term, so shift^k contributes from order k on.
  for (std::size_t k = 0; k < outer.size() && k <= static_cast<std::size_t>(order); ++k) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += outer[k] * p[i];
    p = multiply(p, shift, order);
  }
  return out;
}

/// Series of the derivative: coefficients (k+1) a_{k+1}.
inline Series derivative(const Series& a) {
  Series out(a.size() > 1 ? a.size() - 1 : 0);
  for (std::size_t k = 0; k + 1 < a.size(); ++k) out[k] = static_cast<double>(k + 1) * a[k + 1];
  return out;
}

}  // namespace specpick::series
