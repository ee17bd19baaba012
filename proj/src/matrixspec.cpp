#include "specpick/matrixspec.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <string>

namespace specpick {
namespace {

// Exchanges the adjacent diagonal entries k, k+1 of an upper triangular T by a
// unitary similarity (the complex ztrexc step).
void swap_adjacent(Matrix& t, Eigen::Index k) {
  const Eigen::Index n = t.rows();
  const Cplx t11 = t(k, k), t22 = t(k + 1, k + 1);
  const Cplx f = t(k, k + 1), g = t22 - t11;
  const double r = std::hypot(std::abs(f), std::abs(g));
  if (r == 0.0) return;
  double c;
  Cplx s;
  if (f == Cplx(0.0)) {
    c = 0.0;
    s = 1.0;
  } else {
    c = std::abs(f) / r;
    s = (f / std::abs(f)) * std::conj(g) / r;
  }
  // rows k, k+1 from column k+2 on: x' = c x + s y, y' = c y - conj(s) x
  for (Eigen::Index j = k + 2; j < n; ++j) {
    const Cplx x = t(k, j), y = t(k + 1, j);
    t(k, j) = c * x + s * y;
    t(k + 1, j) = c * y - std::conj(s) * x;
  }
  // columns k, k+1 above row k, with the conjugate rotation
  for (Eigen::Index i = 0; i < k; ++i) {
    const Cplx x = t(i, k), y = t(i, k + 1);
    t(i, k) = c * x + std::conj(s) * y;
    t(i, k + 1) = c * y - s * x;
  }
  t(k, k) = t22;
  t(k + 1, k + 1) = t11;
}

struct RankResult {
  int rank;
  bool ambiguous;
};

RankResult numerical_rank(const Matrix& x, double threshold) {
  Eigen::ColPivHouseholderQR<Matrix> qr(x);
  const auto& r = qr.matrixQR();
  RankResult out{0, false};
  for (Eigen::Index i = 0; i < std::min(r.rows(), r.cols()); ++i) {
    const double p = std::abs(r(i, i));
    if (p > threshold) ++out.rank;
    if (p > 0.1 * threshold && p < 10.0 * threshold) out.ambiguous = true;
  }
  return out;
}

// Index at which rank(X^k) stabilises for X = m / |m|_F, or -k when the rank
// of X^k is ambiguous at rank_tol.
int stabilisation_index(const Matrix& m, double rank_tol) {
  const Eigen::Index a = m.rows();
  const Matrix unit = m / m.norm();
  Matrix power = unit;
  int previous = static_cast<int>(a);
  for (int k = 1; k <= a + 1; ++k) {
    const RankResult now = numerical_rank(power, rank_tol);
    if (now.ambiguous) return -k;
    if (k > 1 && now.rank == previous) return k - 1;
    if (now.rank == 0) return k;
    previous = now.rank;
    power = power * unit;
  }
  throw IllConditioned("minimal_polynomial: ranks of (A - lambda I)^k failed to stabilise");
}

// Blocks of f(J) are graded, the d-th superdiagonal growing like r^d, and
// high powers then fall below rank_tol long before their rank drops. The
// diagonal similarity diag(rho^i), rho a power of two, shrinks the bands above
// the first non-negligible one (band l) until none dominates it. Returns false
// when that would lift a negligible band below l above rank_tol relative to
// band l, since rescaling would then amplify noise into structure.
bool regrade(Matrix& m, double rank_tol) {
  const Eigen::Index a = m.rows();
  std::vector<double> band(static_cast<std::size_t>(a), 0.0);
  for (Eigen::Index i = 0; i < a; ++i)
    for (Eigen::Index j = i; j < a; ++j) band[static_cast<std::size_t>(j - i)] += std::norm(m(i, j));
  for (auto& b : band) b = std::sqrt(b);
  const double norm = m.norm();
  Eigen::Index l = 1;
  while (l < a && !(band[static_cast<std::size_t>(l)] > rank_tol * norm)) ++l;
  if (l + 1 >= a) return false;
  double rho = 1.0;
  for (Eigen::Index d = l + 1; d < a; ++d)
    if (band[static_cast<std::size_t>(d)] > 0.0)
      rho = std::min(rho, std::pow(band[static_cast<std::size_t>(l)] / band[static_cast<std::size_t>(d)],
                                   1.0 / static_cast<double>(d - l)));
  rho = std::exp2(std::floor(std::log2(rho)));
  if (rho == 1.0) return false;
  for (Eigen::Index d = 0; d < l; ++d)
    if (band[static_cast<std::size_t>(d)] > rank_tol * std::pow(rho, static_cast<double>(l - d)) * band[static_cast<std::size_t>(l)])
      return false;
  for (Eigen::Index i = 0; i < a; ++i)
    for (Eigen::Index j = 0; j < a; ++j) m(i, j) *= std::pow(rho, static_cast<double>(j - i));
  return true;
}

// Nilpotency index of the lambda-block T11 - lambda I, by rank stabilization.
int block_exponent(const Matrix& block, double scale, double rank_tol) {
  const Cplx lambda = block.trace() / static_cast<double>(block.rows());
  Matrix m = block;
  m.diagonal().array() -= lambda;
  const double norm = m.norm();
  const double threshold = rank_tol * scale;
  if (norm > 0.1 * threshold && norm < 10.0 * threshold)
    throw IllConditioned("minimal_polynomial: eigenvalue block norm " + std::to_string(norm) +
                         " is within a factor 10 of the rank threshold");
  if (norm <= threshold) return 1;

  int index = stabilisation_index(m, rank_tol);
  if (index < 0 && regrade(m, rank_tol)) index = stabilisation_index(m, rank_tol);
  if (index < 0)
    throw IllConditioned("minimal_polynomial: rank of (A - lambda I)^" + std::to_string(-index) +
                         " is ambiguous at rank_tol");
  return index;
}

// Largest ratio |e_j| / (multiplicity_tol * scale^j), j >= 2, for the
// elementary symmetric functions e_j of the deviations of `pts` from their
// mean. Small values mean the points are a perturbed multiple eigenvalue.
double coalescence(const std::vector<Cplx>& pts, double scale, double mult_tol) {
  Cplx mean = 0.0;
  for (const auto& z : pts) mean += z;
  mean /= static_cast<double>(pts.size());
  std::vector<Cplx> e{1.0};
  for (const auto& z : pts) {
    e.push_back(0.0);
    for (std::size_t j = e.size() - 1; j > 0; --j) e[j] -= (z - mean) * e[j - 1];
  }
  double worst = 0.0;
  for (std::size_t j = 2; j < e.size(); ++j)
    worst = std::max(worst, std::abs(e[j]) / (mult_tol * std::pow(scale, static_cast<double>(j))));
  return worst;
}

// Fallback clustering of the Schur diagonal, used when the characteristic
// polynomial cannot separate nearby multiple eigenvalues. Entries within
// cluster_tol are joined; groups then grow greedily towards their nearest
// neighbours while the deviations coalesce. Returns a label per entry.
std::vector<std::size_t> schur_clusters(const Matrix& t, double scale, const Tolerances& tol) {
  const auto n = static_cast<std::size_t>(t.rows());
  std::vector<std::vector<Cplx>> groups;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) {
    const Cplx z = t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    std::size_t g = 0;
    while (g < groups.size() && std::none_of(groups[g].begin(), groups[g].end(),
                                             [&](Cplx w) { return std::abs(w - z) <= tol.cluster_tol; }))
      ++g;
    if (g == groups.size()) {
      groups.emplace_back();
      members.emplace_back();
    }
    groups[g].push_back(z);
    members[g].push_back(i);
  }
  auto centre = [&](std::size_t g) {
    Cplx c = 0.0;
    for (const auto& z : groups[g]) c += z;
    return c / static_cast<double>(groups[g].size());
  };
  for (;;) {
    std::vector<std::size_t> best;
    std::size_t best_size = 0;
    for (std::size_t s = 0; s < groups.size(); ++s) {
      std::vector<std::size_t> order;
      for (std::size_t o = 0; o < groups.size(); ++o)
        if (o != s) order.push_back(o);
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::abs(centre(x) - centre(s)) < std::abs(centre(y) - centre(s));
      });
      std::vector<Cplx> pts = groups[s];
      std::vector<std::size_t> ids{s};
      for (std::size_t o : order) {
        pts.insert(pts.end(), groups[o].begin(), groups[o].end());
        ids.push_back(o);
        const double c = coalescence(pts, scale, tol.multiplicity_tol);
        if (c > 0.01 && c < 100.0)
          throw AmbiguityError("minimal_polynomial: eigenvalue clusters are ambiguous at multiplicity_tol");
        if (c <= 0.01 && pts.size() > best_size) {
          best_size = pts.size();
          best = ids;
        }
      }
    }
    if (best.empty()) break;
    std::vector<std::vector<Cplx>> g2;
    std::vector<std::vector<std::size_t>> m2{{}};
    g2.emplace_back();
    for (std::size_t id : best) {
      g2[0].insert(g2[0].end(), groups[id].begin(), groups[id].end());
      m2[0].insert(m2[0].end(), members[id].begin(), members[id].end());
    }
    for (std::size_t g = 0; g < groups.size(); ++g)
      if (std::find(best.begin(), best.end(), g) == best.end()) {
        g2.push_back(groups[g]);
        m2.push_back(members[g]);
      }
    groups = std::move(g2);
    members = std::move(m2);
  }
  std::vector<std::size_t> label(n);
  for (std::size_t g = 0; g < members.size(); ++g)
    for (std::size_t i : members[g]) label[i] = g;
  return label;
}

}  // namespace

void JordanSpec::validate() const {
  if (blocks.empty()) throw InvalidArgument("JordanSpec: no blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (b.sizes.empty()) throw InvalidArgument("JordanSpec: eigenvalue without block sizes");
    for (std::size_t k = 0; k < b.sizes.size(); ++k) {
      if (b.sizes[k] < 1) throw InvalidArgument("JordanSpec: block sizes must be positive");
      if (k > 0 && b.sizes[k] < b.sizes[k - 1]) throw InvalidArgument("JordanSpec: block sizes must be non-decreasing");
    }
    if (!std::isfinite(b.eigenvalue.real()) || !std::isfinite(b.eigenvalue.imag()))
      throw InvalidArgument("JordanSpec: non-finite eigenvalue");
    for (std::size_t j = 0; j < i; ++j)
      if (blocks[j].eigenvalue == b.eigenvalue) throw InvalidArgument("JordanSpec: repeated eigenvalue");
  }
}

RootMultiset eigen_multiset(const Matrix& a, const Tolerances& tol) {
  if (!a.allFinite()) throw InvalidArgument("eigen_multiset: non-finite matrix entry");
  return poly_roots(characteristic_polynomial(a), tol);
}

SpectralData minimal_polynomial(const Matrix& a, const Tolerances& tol) {
  const RootMultiset roots = eigen_multiset(a, tol);
  const Eigen::Index n = a.rows();
  Eigen::ComplexSchur<Matrix> schur(a, /*computeU=*/false);
  if (schur.info() != Eigen::Success) throw NonConvergence("minimal_polynomial: Schur iteration failed", 0.0);
  const Matrix t0 = schur.matrixT().triangularView<Eigen::Upper>();

  const double scale = std::max(a.norm(), 1.0);
  std::vector<std::size_t> label(static_cast<std::size_t>(n));
  std::vector<int> count(roots.entries.size(), 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    std::size_t best = 0;
    for (std::size_t r = 1; r < roots.entries.size(); ++r)
      if (std::abs(t0(i, i) - roots.entries[r].value) < std::abs(t0(i, i) - roots.entries[best].value)) best = r;
    label[static_cast<std::size_t>(i)] = best;
    ++count[best];
  }
  std::size_t clusters = roots.entries.size();
  for (std::size_t r = 0; r < roots.entries.size(); ++r)
    if (count[r] != roots.entries[r].multiplicity) {
      label = schur_clusters(t0, scale, tol);
      clusters = *std::max_element(label.begin(), label.end()) + 1;
      break;
    }

  SpectralData out;
  for (std::size_t r = 0; r < clusters; ++r) {
    Matrix t = t0;
    std::vector<std::size_t> lab = label;
    Eigen::Index placed = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (lab[static_cast<std::size_t>(j)] != r) continue;
      for (Eigen::Index k = j - 1; k >= placed; --k) {
        swap_adjacent(t, k);
        std::swap(lab[static_cast<std::size_t>(k)], lab[static_cast<std::size_t>(k + 1)]);
      }
      ++placed;
    }
    const Matrix block = t.topLeftCorner(placed, placed);
    const int m = block_exponent(block, scale, tol.rank_tol);
    // The block mean is backward stable; a charpoly root next to a multiple
    // one is not.
    out.entries.push_back({block.trace() / static_cast<double>(placed), m});
  }
  return out;
}

Matrix jordan_to_matrix(const JordanSpec& spec) {
  spec.validate();
  const int n = spec.dimension();
  Matrix out = Matrix::Zero(n, n);
  int at = 0;
  for (const auto& b : spec.blocks)
    for (int s : b.sizes) {
      for (int i = 0; i < s; ++i) {
        out(at + i, at + i) = b.eigenvalue;
        if (i + 1 < s) out(at + i, at + i + 1) = 1.0;
      }
      at += s;
    }
  return out;
}

Matrix companion(const ComplexPolynomial& p) {
  const int k = p.degree();
  if (k < 1) throw InvalidArgument("companion: degree must be at least 1");
  if (std::abs(p.leading() - 1.0) > 1e-12) throw InvalidArgument("companion: polynomial must be monic");
  Matrix c = Matrix::Zero(k, k);
  for (int i = 0; i + 1 < k; ++i) c(i + 1, i) = 1.0;
  for (int i = 0; i < k; ++i) c(i, k - 1) = -p[i];
  return c;
}

bool is_nonderogatory(const Matrix& a, const Tolerances& tol) {
  return minimal_polynomial(a, tol).degree() == a.rows();
}

bool in_spectral_unit_ball(const Matrix& a, double margin, const Tolerances& tol) {
  const RootMultiset r = eigen_multiset(a, tol);
  return std::all_of(r.entries.begin(), r.entries.end(),
                     [&](const Root& e) { return std::abs(e.value) < 1.0 - margin; });
}

}  // namespace specpick
