#include "specpick/polyalg.hpp"

#include <numeric>
#include <string>

namespace specpick {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Cluster {
  Cplx center;
  int multiplicity;
  double radius;  // max member distance from center
  std::vector<Cplx> members;
};

// Horner value, derivative and running-error bound of a monic polynomial.
struct Evaluation {
  Cplx value;
  Cplx slope;
  double bound;
};

Evaluation evaluate(const std::vector<Cplx>& c, Cplx z) {
  Cplx v = 0.0, d = 0.0;
  double b = 0.0;
  const double az = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
    b = b * az + std::abs(*it);
  }
  return {v, d, b};
}

double initial_radius(const std::vector<Cplx>& c) {
  // Fujiwara bound on the root moduli of a monic polynomial.
  const int n = static_cast<int>(c.size()) - 1;
  double bound = 0.0;
  for (int j = 1; j <= n; ++j) {
    double a = std::abs(c[static_cast<std::size_t>(n - j)]);
    if (j == n) a *= 0.5;
    bound = std::max(bound, std::pow(a, 1.0 / j));
  }
  return std::max(bound, 1e-3);
}

// Taylor coefficients t of p at c, with two scales: s from |p| taken
// coefficientwise, and a normwise rounding floor that treats every
// coefficient as carrying an error of order eps * max |p_k|.
struct TaylorScale {
  std::vector<Cplx> t;
  std::vector<double> s;
  std::vector<double> noise;
};

std::vector<double> shifted_moduli(std::vector<double> a, double r) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i > k; --i) a[i - 1] += r * a[i];
  return a;
}

TaylorScale taylor_with_scale(const ComplexPolynomial& p, Cplx c) {
  const auto& coeffs = p.coeffs();
  std::vector<double> a(coeffs.size());
  double top = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) top = std::max(top, a[i] = std::abs(coeffs[i]));
  const double noise = 4.0 * static_cast<double>(coeffs.size()) * kEps * top;
  TaylorScale out{p.taylor_coefficients(c), shifted_moduli(a, std::abs(c)),
                  shifted_moduli(std::vector<double>(coeffs.size(), noise), std::abs(c))};
  return out;
}

// Newton on p^(m-1), which has a simple root at an m-fold root of p.
Cplx polish(const ComplexPolynomial& p, Cplx z0, int m, double radius) {
  const ComplexPolynomial q = p.derivative(m - 1);
  const ComplexPolynomial dq = q.derivative();
  Cplx z = z0;
  double fz = std::abs(q(z));
  const double max_move = std::max(4.0 * radius, 1e-12 * (1.0 + std::abs(z)));
  for (int it = 0; it < 30 && fz > 0.0; ++it) {
    const Cplx d = dq(z);
    if (d == Cplx(0.0)) break;
    const Cplx next = z - q(z) / d;
    const double fn = std::abs(q(next));
    if (!(fn < fz) || std::abs(next - z0) > max_move + 1e-9) break;
    z = next;
    fz = fn;
  }
  return z;
}

// Union of clusters; the centre is the centroid refined towards the m-fold root.
Cluster merge(const ComplexPolynomial& p, const std::vector<const Cluster*>& parts) {
  Cluster out{0.0, 0, 0.0, {}};
  for (const auto* c : parts) out.members.insert(out.members.end(), c->members.begin(), c->members.end());
  Cplx sum = 0.0;
  for (const auto& z : out.members) sum += z;
  out.multiplicity = static_cast<int>(out.members.size());
  out.center = sum / static_cast<double>(out.multiplicity);
  for (const auto& z : out.members) out.radius = std::max(out.radius, std::abs(z - out.center));
  out.center = polish(p, out.center, out.multiplicity, out.radius);
  return out;
}

std::vector<Cluster> cluster_by_distance(const ComplexPolynomial& p, const std::vector<Cplx>& pts, double tol) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(pts[i] - pts[j]) <= tol) parent[find(i)] = find(j);
  std::vector<Cluster> singles(n);
  for (std::size_t i = 0; i < n; ++i) singles[i] = Cluster{pts[i], 1, 0.0, {pts[i]}};
  std::vector<std::vector<const Cluster*>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(&singles[i]);
  std::vector<Cluster> out;
  for (const auto& g : groups)
    if (!g.empty()) out.push_back(merge(p, g));
  return out;
}

// Negligible lower Taylor coefficients at the centre plus a Pellet test:
// exactly m roots lie in D(c, R) when |t_m| R^m dominates the other
// Taylor terms (inflated by their rounding error). Radii are tried between
// the cluster spread and the nearest outside approximation.
bool pellet_isolates(const ComplexPolynomial& p, const Cluster& c, const std::vector<Cluster>& clusters,
                     const std::vector<std::size_t>& ids, double mult_tol) {
  double inner = 0.0, outer = std::numeric_limits<double>::infinity();
  for (const auto& z : c.members) inner = std::max(inner, std::abs(z - c.center));
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (std::find(ids.begin(), ids.end(), i) != ids.end()) continue;
    for (const auto& z : clusters[i].members) outer = std::min(outer, std::abs(z - c.center));
  }
  const auto [t, s, noise] = taylor_with_scale(p, c.center);
  const auto m = static_cast<std::size_t>(c.multiplicity);
  // Lower Taylor coefficients must be negligible; this separates a multiple
  // root from a tight group of distinct ones, which Pellet alone cannot.
  for (std::size_t j = 0; j < m; ++j)
    if (std::abs(t[j]) > mult_tol * s[j] + noise[j]) return false;
  if (!std::isfinite(outer)) return true;
  inner = std::max(inner, kEps * (1.0 + std::abs(c.center)));
  if (!(inner < outer)) return false;
  const double slack = kEps;
  constexpr int kRadii = 24;
  for (int k = 1; k < kRadii; ++k) {
    const double r = inner * std::pow(outer / inner, static_cast<double>(k) / kRadii);
    double lhs = 0.0, rhs = 0.0, rj = 1.0;
    for (std::size_t j = 0; j < t.size(); ++j, rj *= r) {
      const double err = slack * s[j] + noise[j];
      if (j == m) lhs = (std::abs(t[j]) - err) * rj;
      else rhs += (std::abs(t[j]) + err) * rj;
    }
    if (lhs > rhs) return true;
  }
  return false;
}

// Greedily merges neighbouring clusters whose union behaves as a multiple root.
void merge_multiple_roots(const ComplexPolynomial& p, std::vector<Cluster>& clusters, double mult_tol) {
  for (;;) {
    std::vector<std::size_t> best_set;
    int best_gain = 0;
    double best_radius = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < clusters.size(); ++s) {
      std::vector<std::size_t> order;
      for (std::size_t o = 0; o < clusters.size(); ++o)
        if (o != s) order.push_back(o);
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::abs(clusters[x].center - clusters[s].center) < std::abs(clusters[y].center - clusters[s].center);
      });
      std::vector<const Cluster*> parts{&clusters[s]};
      std::vector<std::size_t> ids{s};
      for (std::size_t o : order) {
        parts.push_back(&clusters[o]);
        ids.push_back(o);
        Cluster candidate = merge(p, parts);
        if (!pellet_isolates(p, candidate, clusters, ids, mult_tol)) continue;
        const int gain = candidate.multiplicity - clusters[s].multiplicity;
        if (gain > best_gain || (gain == best_gain && candidate.radius < best_radius)) {
          best_gain = gain;
          best_radius = candidate.radius;
          best_set = ids;
        }
      }
    }
    if (best_gain == 0) return;
    std::vector<const Cluster*> parts;
    for (std::size_t id : best_set) parts.push_back(&clusters[id]);
    Cluster merged = merge(p, parts);
    std::vector<Cluster> next;
    for (std::size_t i = 0; i < clusters.size(); ++i)
      if (std::find(best_set.begin(), best_set.end(), i) == best_set.end()) next.push_back(clusters[i]);
    next.push_back(std::move(merged));
    clusters = std::move(next);
  }
}

}  // namespace

std::vector<Cplx> aberth_approximations(const ComplexPolynomial& monic_p, int max_iterations) {
  const auto& c = monic_p.coeffs();
  const int n = monic_p.degree();
  if (n < 1) throw InvalidArgument("aberth_approximations: degree must be at least 1");
  if (n == 1) return {-c[0]};

  const Cplx center = -c[static_cast<std::size_t>(n - 1)] / static_cast<double>(n);
  const double radius = initial_radius(monic_p.taylor_coefficients(center));
  std::vector<Cplx> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = center + std::polar(radius, 2.0 * M_PI * k / n + 0.4);

  std::vector<bool> done(z.size(), false);
  for (int it = 0; it < max_iterations; ++it) {
    bool all_done = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      const Evaluation e = evaluate(c, z[i]);
      if (std::abs(e.value) <= 8.0 * n * kEps * e.bound) {
        done[i] = true;
        continue;
      }
      all_done = false;
      Cplx sum = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      Cplx w;
      if (e.slope == Cplx(0.0)) {
        w = std::polar(1e-3 * (1.0 + std::abs(z[i])), 1.0 + static_cast<double>(i));
      } else {
        const Cplx ratio = e.value / e.slope;
        w = ratio / (1.0 - ratio * sum);
      }
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      if (std::abs(w) <= 2.0 * kEps * std::abs(z[i])) done[i] = true;
    }
    if (all_done) break;
  }
  return z;
}

RootMultiset poly_roots(const ComplexPolynomial& p, const Tolerances& tol) {
  if (p.degree() < 1) throw InvalidArgument("poly_roots: polynomial must have degree >= 1");
  if (!(tol.cluster_tol > 0.0)) throw InvalidArgument("poly_roots: cluster_tol must be positive");
  for (const auto& c : p.coeffs())
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw InvalidArgument("poly_roots: non-finite coefficient");

  const ComplexPolynomial monic = p.monic();
  // Exact zero roots are split off so that t^k factors stay exact.
  std::size_t zeros = 0;
  while (monic.coeffs()[zeros] == Cplx(0.0)) ++zeros;
  std::vector<Cplx> rest(monic.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros), monic.coeffs().end());

  std::vector<Cplx> approx(zeros, Cplx(0.0));
  if (rest.size() > 1) {
    auto more = aberth_approximations(ComplexPolynomial(std::move(rest)), tol.max_iterations);
    approx.insert(approx.end(), more.begin(), more.end());
  }

  // Clustering works on q(t) = p(s t) / s^n, with s the power of two at or
  // above the largest root modulus, so the rounding floor of the
  // multiplicity tests is relative to a polynomial with roots in the unit disc.
  double largest = 0.0;
  for (const auto& z : approx) largest = std::max(largest, std::abs(z));
  const double s = largest > 0.0 ? std::exp2(std::ceil(std::log2(largest))) : 1.0;
  std::vector<Cplx> qc = monic.coeffs();
  const int n = monic.degree();
  for (int k = 0; k < n; ++k) qc[static_cast<std::size_t>(k)] *= std::pow(s, k - n);
  const ComplexPolynomial scaled(std::move(qc));
  for (auto& z : approx) z /= s;

  std::vector<Cluster> clusters = cluster_by_distance(scaled, approx, tol.cluster_tol / s);
  merge_multiple_roots(scaled, clusters, tol.multiplicity_tol);

  const double accept = tol.residual_tol * (1.0 + monic.norm1());
  RootMultiset out;
  double worst = 0.0;
  for (const auto& c : clusters) {
    const Cplx r = s * c.center;
    const double residual = std::abs(monic(r));
    worst = std::max(worst, residual);
    if (tol.strict) {
      const auto [t, sc, noise] = taylor_with_scale(scaled, c.center);
      const auto m = static_cast<std::size_t>(c.multiplicity);
      for (std::size_t j = 0; j < m; ++j)
        if (std::abs(t[j]) > tol.multiplicity_tol * sc[j] + noise[j])
          throw AmbiguityError("poly_roots: derivative of order " + std::to_string(j) +
                               " does not vanish at a root of claimed multiplicity " + std::to_string(m));
      if (m < t.size() && std::abs(t[m]) <= tol.multiplicity_tol * sc[m] + noise[m])
        throw AmbiguityError("poly_roots: multiplicity " + std::to_string(m) + " understated at root");
    }
    out.entries.push_back({r, c.multiplicity});
  }
  if (worst > accept)
    throw NonConvergence("poly_roots: residual " + std::to_string(worst) + " exceeds acceptance " +
                             std::to_string(accept),
                         worst);
  std::sort(out.entries.begin(), out.entries.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

double mobius_distance(Cplx z1, Cplx z2) {
  if (!in_open_disc(z1) || !in_open_disc(z2)) throw DomainError("mobius_distance: argument outside the open unit disc");
  return std::abs(z1 - z2) / std::abs(1.0 - std::conj(z2) * z1);
}

Cplx disc_automorphism(Cplx a, Cplx z) {
  if (!in_open_disc(a)) throw DomainError("disc_automorphism: centre outside the open unit disc");
  return (z - a) / (1.0 - std::conj(a) * z);
}

}  // namespace specpick
