#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "specpick/matrixspec.hpp"

namespace specpick::testing {

/// Taylor coefficients f^(j)(z) / j!, j = 0..order, by the trapezoid rule on
/// the circle |t - z| = r. Independent of any series arithmetic.
inline std::vector<Cplx> cauchy_jet(const std::function<Cplx(Cplx)>& f, Cplx z, int order, double r,
                                    int points = 256) {
  std::vector<Cplx> out(static_cast<std::size_t>(order) + 1, Cplx(0.0));
  for (int k = 0; k < points; ++k) {
    const double theta = 2.0 * M_PI * k / points;
    const Cplx v = f(z + std::polar(r, theta));
    for (int j = 0; j <= order; ++j) out[static_cast<std::size_t>(j)] += v * std::polar(1.0, -j * theta);
  }
  for (int j = 0; j <= order; ++j) out[static_cast<std::size_t>(j)] /= points * std::pow(r, j);
  return out;
}

/// Largest singular value.
inline double operator_norm(const Matrix& a) { return Eigen::JacobiSVD<Matrix>(a).singularValues()(0); }

}  // namespace specpick::testing
