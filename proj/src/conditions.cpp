#include "specpick/conditions.hpp"

#include <cmath>
#include <limits>

#include "specpick/funcalc.hpp"

namespace specpick {
namespace {

// Decisions inside this factor of their matching tolerance are borderline.
constexpr double kNearMiss = 1e3;

Branch decide(double excess, double tol) {
  if (excess > tol) return Branch::Fails;
  if (excess >= -tol) return Branch::Borderline;
  return Branch::Holds;
}

Branch combine(Branch x, Branch y) {
  if (x == Branch::Fails || y == Branch::Fails) return Branch::Fails;
  if (x == Branch::Borderline || y == Branch::Borderline) return Branch::Borderline;
  return Branch::Holds;
}

// max over mu in `at` of prod over lambda in `zeros` of M(mu, lambda)^m(lambda)
double directed_product(const SpectralData& zeros, const SpectralData& at) {
  double worst = 0.0;
  for (const auto& mu : at.entries) {
    double p = 1.0;
    for (const auto& z : zeros.entries) p *= std::pow(mobius_distance(mu.eigenvalue, z.eigenvalue), z.exponent);
    worst = std::max(worst, p);
  }
  return worst;
}

int q_term(int m, int ord) { return (m - 1) / (ord + 1) + 1; }

// B(sigma(W)) grouped at cluster_tol, each point carrying q(nu, j, k).
std::vector<ImagePoint> image_points(const BlaschkeProduct& b, const SpectralData& spec, const Tolerances& tol) {
  const HoloFn db = HoloFn::blaschke(b).derivative();
  std::vector<ImagePoint> out;
  for (const auto& e : spec.entries) {
    const Cplx w = b(e.eigenvalue);
    const int q = q_term(e.exponent, ord_of_vanishing(db, e.eigenvalue, tol));
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const ImagePoint& p) { return std::abs(p.value - w) <= tol.cluster_tol; });
    if (it == out.end())
      out.push_back({w, q});
    else
      it->q = std::max(it->q, q);
  }
  return out;
}

// max over mu in `at` of prod over nu in `over` of M(mu / s_at, nu / s_over)^q(nu)
double scaled_product(const std::vector<ImagePoint>& at, Cplx s_at, const std::vector<ImagePoint>& over, Cplx s_over) {
  double worst = 0.0;
  for (const auto& mu : at) {
    double p = 1.0;
    for (const auto& nu : over) p *= std::pow(mobius_distance(mu.value / s_at, nu.value / s_over), nu.q);
    worst = std::max(worst, p);
  }
  return worst;
}

double distance_to(const SpectralData& spec, Cplx z) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : spec.entries) best = std::min(best, std::abs(e.eigenvalue - z));
  return best;
}

// Largest distance from a point of B^{-1}{w} to sigma(W).
double preimage_mismatch(const BlaschkeProduct& b, Cplx w, const SpectralData& spec, const Tolerances& tol) {
  double worst = 0.0;
  for (const auto& r : preimage(b, w, tol).entries) worst = std::max(worst, distance_to(spec, r.value));
  return worst;
}

std::string index_note(int k) { return "k=" + std::to_string(k) + ": "; }

const DataPoint& at(const ThreePointData& d, int i) { return d.points[static_cast<std::size_t>(i - 1)]; }

void require_index(int i, const char* who) {
  if (i < 1 || i > 3) throw InvalidArgument(std::string(who) + ": index must be 1, 2 or 3");
}

}  // namespace

const char* to_string(Status s) { return s == Status::Infeasible ? "Infeasible" : "Inconclusive"; }

const char* to_string(Branch b) {
  switch (b) {
    case Branch::Holds:
      return "holds";
    case Branch::Fails:
      return "fails";
    default:
      return "borderline";
  }
}

int DataPoint::dimension() const {
  if (const auto* m = std::get_if<Matrix>(&target)) return static_cast<int>(m->rows());
  return std::get<JordanSpec>(target).dimension();
}

SpectralData DataPoint::spectral_data(const Tolerances& tol) const {
  if (const auto* m = std::get_if<Matrix>(&target)) {
    if (m->rows() != m->cols() || m->rows() < 1) throw InvalidArgument("DataPoint: target must be square");
    return minimal_polynomial(*m, tol);
  }
  const auto& spec = std::get<JordanSpec>(target);
  spec.validate();
  return spec.spectral_data();
}

void DataPoint::validate(const Tolerances& tol) const {
  if (!in_open_disc(node)) throw DomainError("DataPoint: node outside the open unit disc");
  for (const auto& e : spectral_data(tol).entries)
    if (!in_open_disc(e.eigenvalue)) throw DomainError("DataPoint: target spectrum leaves the open unit disc");
}

void ThreePointData::validate(const Tolerances& tol) const {
  for (const auto& p : points) p.validate(tol);
  if (dimension() < 2) throw InvalidArgument("ThreePointData: dimension must be at least 2");
  for (std::size_t i = 0; i < 3; ++i) {
    if (points[i].dimension() != dimension()) throw InvalidArgument("ThreePointData: targets differ in size");
    for (std::size_t j = 0; j < i; ++j)
      if (points[i].node == points[j].node) throw InvalidArgument("ThreePointData: nodes must be distinct");
  }
}

TwoPointVerdict check_two_point(const DataPoint& p1, const DataPoint& p2, const Tolerances& tol) {
  p1.validate(tol);
  p2.validate(tol);
  if (p1.node == p2.node) throw InvalidArgument("check_two_point: nodes must be distinct");
  if (p1.dimension() != p2.dimension()) throw InvalidArgument("check_two_point: targets differ in size");

  TwoPointVerdict v;
  auto& r = v.report;
  r.spectrum1 = p1.spectral_data(tol);
  r.spectrum2 = p2.spectral_data(tol);
  r.term12 = directed_product(r.spectrum1, r.spectrum2);
  r.term21 = directed_product(r.spectrum2, r.spectrum1);
  r.lhs = std::max(r.term12, r.term21);
  r.rhs = mobius_distance(p1.node, p2.node);
  r.margin = r.lhs - r.rhs;
  switch (decide(r.margin, tol.report_tol)) {
    case Branch::Fails:
      v.status = Status::Infeasible;
      v.notes.push_back("product bound exceeds M(zeta1, zeta2) by " + std::to_string(r.margin));
      break;
    case Branch::Borderline:
      v.borderline = true;
      v.notes.push_back("margin within report_tol of zero");
      break;
    default:
      break;
  }
  return v;
}

int q_exponent(Cplx nu, int j, int k, const ThreePointData& data, const Tolerances& tol) {
  require_index(j, "q_exponent");
  require_index(k, "q_exponent");
  if (j == k) throw InvalidArgument("q_exponent: j and k must differ");
  data.validate(tol);
  const BlaschkeProduct bk = minimal_blaschke(at(data, k).spectral_data(tol));
  const HoloFn db = HoloFn::blaschke(bk).derivative();
  int q = 0;
  for (const auto& e : at(data, j).spectral_data(tol).entries)
    if (std::abs(bk(e.eigenvalue) - nu) <= tol.cluster_tol)
      q = std::max(q, q_term(e.exponent, ord_of_vanishing(db, e.eigenvalue, tol)));
  if (q == 0) throw InvalidArgument("q_exponent: no eigenvalue of W_j maps to nu under B_k");
  return q;
}

ThreePointVerdict check_three_point(const ThreePointData& data, const Tolerances& tol) {
  data.validate(tol);
  ThreePointVerdict v;
  auto& rep = v.report;
  for (int i = 1; i <= 3; ++i) rep.spectra[static_cast<std::size_t>(i - 1)] = at(data, i).spectral_data(tol);

  for (int k = 1; k <= 3; ++k) {
    KBranchReport& br = rep.branches[static_cast<std::size_t>(k - 1)];
    br.k = k;
    br.l = k == 1 ? 2 : 1;
    br.g = k == 3 ? 2 : 3;
    const Cplx zk = at(data, k).node;
    const SpectralData& sg = rep.spectra[static_cast<std::size_t>(br.g - 1)];
    const SpectralData& sl = rep.spectra[static_cast<std::size_t>(br.l - 1)];
    br.blaschke = minimal_blaschke(rep.spectra[static_cast<std::size_t>(k - 1)]);
    br.psi_g = disc_automorphism(zk, at(data, br.g).node);
    br.psi_l = disc_automorphism(zk, at(data, br.l).node);
    br.rhs = mobius_distance(at(data, br.l).node, at(data, br.g).node);

    // branch 1
    br.image_g = image_points(br.blaschke, sg, tol);
    br.image_l = image_points(br.blaschke, sl, tol);
    br.radius_excess = -std::numeric_limits<double>::infinity();
    bool inside = true;
    for (const auto& p : br.image_g) {
      br.radius_excess = std::max(br.radius_excess, std::abs(p.value) - std::abs(br.psi_g));
      inside = inside && in_open_disc(p.value / br.psi_g);
    }
    for (const auto& p : br.image_l) {
      br.radius_excess = std::max(br.radius_excess, std::abs(p.value) - std::abs(br.psi_l));
      inside = inside && in_open_disc(p.value / br.psi_l);
    }
    const Branch containment = decide(br.radius_excess, tol.report_tol);
    Branch inequality = Branch::Borderline;
    if (inside) {
      br.product_lg = scaled_product(br.image_l, br.psi_l, br.image_g, br.psi_g);
      br.product_gl = scaled_product(br.image_g, br.psi_g, br.image_l, br.psi_l);
      br.lhs = std::max(*br.product_lg, *br.product_gl);
      br.margin = *br.lhs - br.rhs;
      inequality = decide(*br.margin, tol.report_tol);
    }
    br.branch1 = combine(containment, inequality);

    // branch 2: theta0 must rotate psi_k(zeta_G) onto some B_k(lambda), lambda in sigma(W_G)
    bool near_candidate = false;
    for (const auto& e : sg.entries) {
      const Cplx w = br.blaschke(e.eigenvalue);
      const double gap = std::abs(std::abs(w) - std::abs(br.psi_g));
      if (gap > tol.cluster_tol) {
        near_candidate = near_candidate || gap <= kNearMiss * tol.cluster_tol;
        continue;
      }
      ThetaCandidate c;
      c.theta = std::arg(w / br.psi_g);
      c.source = e.eigenvalue;
      const Cplx rot = std::polar(1.0, c.theta);
      c.worst_match = std::max(preimage_mismatch(br.blaschke, rot * br.psi_g, sg, tol),
                               preimage_mismatch(br.blaschke, rot * br.psi_l, sl, tol));
      c.containment = c.worst_match <= tol.cluster_tol              ? Branch::Holds
                      : c.worst_match <= kNearMiss * tol.cluster_tol ? Branch::Borderline
                                                                     : Branch::Fails;
      if (c.containment == Branch::Holds && !br.theta0) br.theta0 = c.theta;
      br.candidates.push_back(c);
    }
    if (br.theta0)
      br.branch2 = Branch::Holds;
    else if (near_candidate || std::any_of(br.candidates.begin(), br.candidates.end(),
                                           [](const ThetaCandidate& c) { return c.containment == Branch::Borderline; }))
      br.branch2 = Branch::Borderline;
    else
      br.branch2 = Branch::Fails;

    if (br.branch1 == Branch::Fails && br.branch2 == Branch::Fails) {
      if (!rep.witness) {
        const double m = (br.margin && *br.margin > tol.report_tol) ? *br.margin : br.radius_excess;
        rep.witness = ThreePointWitness{k, m, br.candidates};
        v.status = Status::Infeasible;
      }
      v.notes.push_back(index_note(k) + "both alternatives fail");
    } else if (br.branch1 != Branch::Holds && br.branch2 != Branch::Holds) {
      v.borderline = true;
      v.notes.push_back(index_note(k) + "undecided within tolerance (branch 1 " + to_string(br.branch1) +
                        ", branch 2 " + to_string(br.branch2) + ")");
    } else if (br.branch1 == Branch::Holds && br.branch2 == Branch::Holds) {
      v.notes.push_back(index_note(k) + "both alternatives hold");
    }
  }
  return v;
}

BaribeauKamaraVerdict check_baribeau_kamara(const ThreePointData& data, int base, std::optional<int> nu_override,
                                            const Tolerances& tol) {
  require_index(base, "check_baribeau_kamara");
  if (nu_override && *nu_override < 1) throw InvalidArgument("check_baribeau_kamara: nu must be positive");
  data.validate(tol);

  BaribeauKamaraVerdict v;
  auto& r = v.report;
  r.base = base;
  r.j1 = base == 1 ? 2 : 1;
  r.j2 = base == 3 ? 2 : 3;
  r.nu = nu_override.value_or(data.dimension());
  const Cplx zk = at(data, base).node;
  r.blaschke = minimal_blaschke(at(data, base).spectral_data(tol));

  bool near_circle = false;
  auto scaled_set = [&](int j, std::vector<Cplx>& out) {
    const Cplx psi = disc_automorphism(zk, at(data, j).node);
    for (const auto& e : at(data, j).spectral_data(tol).entries) {
      const Cplx x = r.blaschke(e.eigenvalue) / psi;
      const double d = std::abs(x) - 1.0;
      if (d < -tol.report_tol) {
        out.push_back(x);
      } else {
        r.excluded.push_back(x);
        near_circle = near_circle || d <= tol.report_tol;
      }
    }
  };
  scaled_set(r.j1, r.set1);
  scaled_set(r.j2, r.set2);
  r.rhs = std::pow(mobius_distance(at(data, r.j1).node, at(data, r.j2).node), 1.0 / r.nu);

  v.notes.push_back("boundary hypothesis checked at the two non-base nodes only");
  if (near_circle) {
    v.borderline = true;
    v.notes.push_back("scaled spectrum within report_tol of the unit circle; excluded");
  }
  if (r.set1.empty() || r.set2.empty()) {
    v.notes.push_back("hypothesis fails: a scaled spectrum lies on or outside the unit circle");
    return v;
  }
  r.lhs = hausdorff_distance(r.set1, r.set2, [](Cplx p, Cplx q) { return mobius_distance(p, q); });
  r.margin = *r.lhs - r.rhs;
  switch (decide(*r.margin, tol.report_tol)) {
    case Branch::Fails:
      if (!near_circle) v.status = Status::Infeasible;
      break;
    case Branch::Borderline:
      v.borderline = true;
      v.notes.push_back("margin within report_tol of zero");
      break;
    default:
      break;
  }
  return v;
}

}  // namespace specpick
