#include "specpick/funcalc.hpp"

#include <numeric>

namespace specpick {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double factorial(int j) {
  double f = 1.0;
  for (int i = 2; i <= j; ++i) f *= i;
  return f;
}

void require_disc(const SpectralData& data, const char* who) {
  for (const auto& e : data.entries)
    if (!in_open_disc(e.eigenvalue))
      throw DomainError(std::string(who) + ": spectrum must lie in the open unit disc");
}

Matrix evaluate_on(const ComplexPolynomial& p, const Matrix& a) {
  const Eigen::Index n = a.rows();
  if (p.is_zero()) return Matrix::Zero(n, n);
  Matrix out = p.leading() * Matrix::Identity(n, n);
  for (int k = p.degree() - 1; k >= 0; --k) {
    out = out * a;
    out.diagonal().array() += p[k];
  }
  return out;
}

}  // namespace

HoloFn HoloFn::polynomial(ComplexPolynomial p) { return HoloFn(std::make_shared<const Node>(Node{std::move(p)})); }
HoloFn HoloFn::blaschke(BlaschkeProduct b) { return HoloFn(std::make_shared<const Node>(Node{std::move(b)})); }

HoloFn HoloFn::scaled(Cplx c) const { return HoloFn(std::make_shared<const Node>(Node{Scaled{*this, c}})); }

HoloFn HoloFn::composed(Cplx a) const {
  if (!in_open_disc(a)) throw DomainError("HoloFn::composed: automorphism centre outside the open unit disc");
  return HoloFn(std::make_shared<const Node>(Node{Composed{*this, a}}));
}

HoloFn HoloFn::derivative(int k) const {
  if (k < 0) throw InvalidArgument("HoloFn::derivative: negative order");
  if (k == 0) return *this;
  return HoloFn(std::make_shared<const Node>(Node{Derived{*this, k}}));
}

Cplx HoloFn::operator()(Cplx z) const {
  return std::visit(overloaded{
                        [&](const ComplexPolynomial& p) { return p(z); },
                        [&](const BlaschkeProduct& b) { return b(z); },
                        [&](const Scaled& s) { return s.c * s.fn(z); },
                        [&](const Composed& c) { return c.fn(disc_automorphism(c.a, z)); },
                        [&](const Derived& d) { return d.fn.derivative_at(z, d.order); },
                    },
                    node_->value);
}

series::Series HoloFn::taylor(Cplx z, int order) const {
  if (order < 0) throw InvalidArgument("HoloFn::taylor: negative order");
  const auto len = static_cast<std::size_t>(order) + 1;
  return std::visit(overloaded{
                        [&](const ComplexPolynomial& p) {
                          series::Series t = p.taylor_coefficients(z);
                          t.resize(len, Cplx(0.0));
                          return t;
                        },
                        [&](const BlaschkeProduct& b) {
                          if (!in_open_disc(z)) throw DomainError("HoloFn::taylor: point outside the open unit disc");
                          return b.taylor(z, order);
                        },
                        [&](const Scaled& s) {
                          series::Series t = s.fn.taylor(z, order);
                          for (auto& x : t) x *= s.c;
                          return t;
                        },
                        [&](const Composed& c) {
                          if (!in_open_disc(z)) throw DomainError("HoloFn::taylor: point outside the open unit disc");
                          const series::Series inner = BlaschkeProduct({{c.a, 1}}).taylor(z, order);
                          return series::compose(c.fn.taylor(inner[0], order), inner, order);
                        },
                        [&](const Derived& d) {
                          series::Series t = d.fn.taylor(z, order + d.order);
                          for (int k = 0; k < d.order; ++k) t = series::derivative(t);
                          return t;
                        },
                    },
                    node_->value);
}

Cplx HoloFn::derivative_at(Cplx z, int j) const {
  return taylor(z, j)[static_cast<std::size_t>(j)] * factorial(j);
}

ComplexPolynomial hermite_interpolant(const HoloFn& f, const SpectralData& data, const Tolerances& tol) {
  require_disc(data, "hermite_interpolant");
  if (data.entries.empty()) throw InvalidArgument("hermite_interpolant: empty spectral data");
  for (std::size_t i = 0; i < data.entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(data.entries[i].eigenvalue - data.entries[j].eigenvalue) < 10.0 * tol.cluster_tol)
        throw IllConditioned("hermite_interpolant: interpolation nodes closer than 10 * cluster_tol");

  std::vector<Cplx> z;
  std::vector<std::size_t> group;
  std::vector<series::Series> jets;
  for (std::size_t g = 0; g < data.entries.size(); ++g) {
    const auto& e = data.entries[g];
    if (e.exponent < 1) throw InvalidArgument("hermite_interpolant: exponents must be positive");
    jets.push_back(f.taylor(e.eigenvalue, e.exponent - 1));
    for (int k = 0; k < e.exponent; ++k) {
      z.push_back(e.eigenvalue);
      group.push_back(g);
    }
  }
  const std::size_t n = z.size();
  // column j of the divided-difference table, updated in place from the bottom
  std::vector<Cplx> q(n), coeff(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = jets[group[i]][0];
  coeff[0] = q[0];
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      if (group[i] == group[i - j])
        q[i] = jets[group[i]][j];
      else
        q[i] = (q[i] - q[i - 1]) / (z[i] - z[i - j]);
    }
    coeff[j] = q[j];
  }
  ComplexPolynomial p = ComplexPolynomial::constant(coeff[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) p = p * ComplexPolynomial{-z[k], 1.0} + ComplexPolynomial::constant(coeff[k]);
  return p;
}

Matrix apply(const HoloFn& f, const Matrix& a, const Tolerances& tol) {
  if (a.rows() != a.cols() || a.rows() < 1) throw InvalidArgument("apply: matrix must be square");
  const SpectralData data = minimal_polynomial(a, tol);
  require_disc(data, "apply");
  if (const auto* p = std::get_if<ComplexPolynomial>(&f.node().value)) return evaluate_on(*p, a);
  return evaluate_on(hermite_interpolant(f, data, tol), a);
}

Matrix apply(const HoloFn& f, const JordanSpec& a, const Tolerances& tol) {
  const SpectralData data = a.spectral_data();
  require_disc(data, "apply");
  if (const auto* p = std::get_if<ComplexPolynomial>(&f.node().value)) return evaluate_on(*p, jordan_to_matrix(a));
  return evaluate_on(hermite_interpolant(f, data, tol), jordan_to_matrix(a));
}

SpectralData nilpotent_combo_minpoly(const std::vector<Cplx>& alphas, const Tolerances& tol) {
  const int n = static_cast<int>(alphas.size());
  if (n < 2) throw InvalidArgument("nilpotent_combo_minpoly: need n >= 2 coefficients");
  double scale = 1.0;
  for (const auto& x : alphas) scale = std::max(scale, std::abs(x));
  int l = n;
  for (int j = 1; j < n; ++j)
    if (std::abs(alphas[static_cast<std::size_t>(j)]) > tol.drop_tol * scale) {
      l = j;
      break;
    }
  return SpectralData{{{alphas[0], (n - 1) / l + 1}}};
}

int ord_of_vanishing(const HoloFn& g, Cplx a, const Tolerances& tol) {
  if (!in_open_disc(a)) throw DomainError("ord_of_vanishing: point outside the open unit disc");
  const series::Series t = g.taylor(a, tol.order_cap);
  const double rho = 0.5 * (1.0 - std::abs(a));
  std::vector<double> term(t.size());
  double r = 1.0, scale = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j, r *= rho) {
    term[j] = std::abs(t[j]) * r;
    scale = std::max(scale, term[j]);
  }
  if (!(scale > 0.0))
    throw InvalidArgument("ord_of_vanishing: function vanishes to order beyond " + std::to_string(tol.order_cap));
  for (std::size_t j = 0; j < term.size(); ++j)
    if (term[j] > tol.drop_tol * scale) return static_cast<int>(j);
  return tol.order_cap;
}

SpectralData predicted_minpoly(const HoloFn& f, const SpectralData& data, const Tolerances& tol) {
  require_disc(data, "predicted_minpoly");
  const HoloFn df = f.derivative();
  const std::size_t n = data.entries.size();
  std::vector<Cplx> image(n);
  std::vector<int> k(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = data.entries[i];
    image[i] = f(e.eigenvalue);
    k[i] = (e.exponent - 1) / (ord_of_vanishing(df, e.eigenvalue, tol) + 1) + 1;
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(image[i] - image[j]) <= tol.cluster_tol) parent[find(i)] = find(j);
  if (tol.strict)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (find(i) != find(j) && std::abs(image[i] - image[j]) <= 10.0 * tol.cluster_tol)
          throw AmbiguityError("predicted_minpoly: fibre images neither identified nor separated by 10 * cluster_tol");

  SpectralData out;
  std::vector<std::size_t> root_of;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    const auto it = std::find(root_of.begin(), root_of.end(), r);
    if (it == root_of.end()) {
      root_of.push_back(r);
      Cplx sum = 0.0;
      int count = 0, exponent = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (find(j) == r) {
          sum += image[j];
          ++count;
          exponent = std::max(exponent, k[j]);
        }
      out.entries.push_back({sum / static_cast<double>(count), exponent});
    }
  }
  return out;
}

}  // namespace specpick
