#include "specpick/io.hpp"

#include <cstdio>

namespace specpick::io {
namespace {

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

std::string item(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

int parse_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

double parse_real(const Json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  return j.get<double>();
}

ComplexPolynomial parse_polynomial(const Json& j, const std::string& path) {
  std::vector<Cplx> c;
  const Json& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(parse_complex(a[i], item(path, i)));
  if (c.empty()) c.push_back(0.0);
  return ComplexPolynomial(std::move(c));
}

Json branch_json(const KBranchReport& b) {
  Json images_g = Json::array(), images_l = Json::array(), cands = Json::array();
  for (const auto& p : b.image_g) images_g.push_back({{"value", to_json(p.value)}, {"q", p.q}});
  for (const auto& p : b.image_l) images_l.push_back({{"value", to_json(p.value)}, {"q", p.q}});
  for (const auto& c : b.candidates)
    cands.push_back({{"theta", c.theta},
                     {"source", to_json(c.source)},
                     {"containment", to_string(c.containment)},
                     {"worst_match", c.worst_match}});
  auto opt = [](const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); };
  return {{"k", b.k},
          {"G", b.g},
          {"L", b.l},
          {"blaschke", to_json(b.blaschke)},
          {"psi_G", to_json(b.psi_g)},
          {"psi_L", to_json(b.psi_l)},
          {"spectrum_Bk_WG", images_g},
          {"spectrum_Bk_WL", images_l},
          {"radius_excess", b.radius_excess},
          {"product_LG", opt(b.product_lg)},
          {"product_GL", opt(b.product_gl)},
          {"lhs", opt(b.lhs)},
          {"rhs", b.rhs},
          {"margin", opt(b.margin)},
          {"branch1", to_string(b.branch1)},
          {"theta_candidates", cands},
          {"theta0", opt(b.theta0)},
          {"branch2", to_string(b.branch2)}};
}

template <typename V>
Json envelope(const V& v, Json report) {
  return {{"status", to_string(v.status)}, {"borderline", v.borderline}, {"notes", v.notes}, {"report", report}};
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_string(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
}

Cplx parse_complex(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError(path, "expected a complex number [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Matrix parse_matrix(const Json& j, const std::string& path) {
  const Json& rows = array_at(j, path);
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) throw SchemaError(path, "empty matrix");
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::string rp = item(path, static_cast<std::size_t>(i));
    const Json& row = array_at(rows[static_cast<std::size_t>(i)], rp);
    if (static_cast<Eigen::Index>(row.size()) != n) throw SchemaError(rp, "matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k)
      a(i, k) = parse_complex(row[static_cast<std::size_t>(k)], item(rp, static_cast<std::size_t>(k)));
  }
  return a;
}

JordanSpec parse_jordan(const Json& j, const std::string& path) {
  JordanSpec s;
  const std::string bp = path + ".blocks";
  const Json& blocks = array_at(member(j, "blocks", path), bp);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string ip = item(bp, i);
    JordanBlock b{parse_complex(member(blocks[i], "lambda", ip), ip + ".lambda"), {}};
    const Json& sizes = array_at(member(blocks[i], "sizes", ip), ip + ".sizes");
    for (std::size_t k = 0; k < sizes.size(); ++k) b.sizes.push_back(parse_int(sizes[k], item(ip + ".sizes", k)));
    s.blocks.push_back(std::move(b));
  }
  try {
    s.validate();
  } catch (const InvalidArgument& e) {
    throw SchemaError(path, e.what());
  }
  return s;
}

DataPoint parse_point(const Json& j, const std::string& path) {
  DataPoint p;
  p.node = parse_complex(member(j, "node", path), path + ".node");
  if (!in_open_disc(p.node)) throw SchemaError(path + ".node", "node must lie in the open unit disc");
  const Json& t = member(j, "target", path);
  if (t.is_object())
    p.target = parse_jordan(t, path + ".target");
  else
    p.target = parse_matrix(t, path + ".target");
  return p;
}

std::vector<DataPoint> parse_points(const Json& j, std::size_t count, const std::string& path) {
  const std::string pp = path + ".points";
  const Json& a = array_at(member(j, "points", path), pp);
  if (a.size() != count) throw SchemaError(pp, "expected " + std::to_string(count) + " data points");
  std::vector<DataPoint> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(parse_point(a[i], item(pp, i)));
  return out;
}

HoloFn parse_function(const Json& j, const std::string& path) {
  const Json& kind = member(j, "kind", path);
  if (!kind.is_string()) throw SchemaError(path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "identity") return HoloFn::identity();
  if (k == "polynomial") return HoloFn::polynomial(parse_polynomial(member(j, "coeffs", path), path + ".coeffs"));
  if (k == "blaschke") {
    std::vector<BlaschkeFactor> f;
    const std::string zp = path + ".zeros";
    const Json& zeros = array_at(member(j, "zeros", path), zp);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      const std::string ip = item(zp, i);
      const Cplx z = parse_complex(member(zeros[i], "zero", ip), ip + ".zero");
      if (!in_open_disc(z)) throw SchemaError(ip + ".zero", "zero must lie in the open unit disc");
      const int m = zeros[i].contains("multiplicity") ? parse_int(zeros[i]["multiplicity"], ip + ".multiplicity") : 1;
      if (m < 1) throw SchemaError(ip + ".multiplicity", "must be positive");
      f.push_back({z, m});
    }
    return HoloFn::blaschke(BlaschkeProduct(std::move(f)));
  }
  if (k == "scaled")
    return parse_function(member(j, "f", path), path + ".f").scaled(parse_complex(member(j, "c", path), path + ".c"));
  if (k == "composed") {
    const Cplx a = parse_complex(member(j, "a", path), path + ".a");
    if (!in_open_disc(a)) throw SchemaError(path + ".a", "centre must lie in the open unit disc");
    return parse_function(member(j, "f", path), path + ".f").composed(a);
  }
  throw SchemaError(path + ".kind", "unknown function kind '" + k + "'");
}

Correspondence parse_correspondence(const Json& j, const std::string& path) {
  Correspondence g;
  g.degree = parse_int(member(j, "degree", path), path + ".degree");
  if (g.degree < 1) throw SchemaError(path + ".degree", "must be positive");
  const std::string cp = path + ".coeffs";
  const Json& c = array_at(member(j, "coeffs", path), cp);
  if (static_cast<int>(c.size()) != g.degree) throw SchemaError(cp, "need one polynomial per degree");
  for (std::size_t i = 0; i < c.size(); ++i) g.coeffs.push_back(parse_polynomial(c[i], item(cp, i)));
  if (j.contains("domain")) {
    const std::string dp = path + ".domain";
    const Json& d = j["domain"];
    if (d.contains("center")) g.domain.center = parse_complex(d["center"], dp + ".center");
    g.domain.radius = parse_real(member(d, "radius", dp), dp + ".radius");
    if (!(g.domain.radius > 0.0)) throw SchemaError(dp + ".radius", "must be positive");
  }
  return g;
}

Json to_json(Cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const std::vector<Cplx>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

Json to_json(const Matrix& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < a.cols(); ++k) row.push_back(to_json(a(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const JordanSpec& s) {
  Json blocks = Json::array();
  for (const auto& b : s.blocks) blocks.push_back({{"lambda", to_json(b.eigenvalue)}, {"sizes", b.sizes}});
  return {{"blocks", blocks}};
}

Json to_json(const SpectralData& d) {
  Json out = Json::array();
  for (const auto& e : d.entries) out.push_back({{"eigenvalue", to_json(e.eigenvalue)}, {"exponent", e.exponent}});
  return out;
}

Json to_json(const RootMultiset& r) {
  Json out = Json::array();
  for (const auto& e : r.entries) out.push_back({{"value", to_json(e.value)}, {"multiplicity", e.multiplicity}});
  return out;
}

Json to_json(const BlaschkeProduct& b) {
  Json out = Json::array();
  for (const auto& f : b.factors()) out.push_back({{"zero", to_json(f.zero)}, {"multiplicity", f.multiplicity}});
  return out;
}

Json to_json(const DataPoint& p) {
  Json target = std::holds_alternative<Matrix>(p.target) ? to_json(std::get<Matrix>(p.target))
                                                         : to_json(std::get<JordanSpec>(p.target));
  return {{"node", to_json(p.node)}, {"target", target}};
}

Json to_json(const ThreePointData& d) {
  Json pts = Json::array();
  for (const auto& p : d.points) pts.push_back(to_json(p));
  return {{"points", pts}};
}

Json to_json(const Correspondence& g) {
  Json c = Json::array();
  for (const auto& p : g.coeffs) c.push_back(to_json(p.coeffs()));
  return {{"degree", g.degree},
          {"coeffs", c},
          {"domain", {{"center", to_json(g.domain.center)}, {"radius", g.domain.radius}}}};
}

Json to_json(const TwoPointVerdict& v) {
  const auto& r = v.report;
  return envelope(v, {{"spectrum1", to_json(r.spectrum1)},
                      {"spectrum2", to_json(r.spectrum2)},
                      {"term12", r.term12},
                      {"term21", r.term21},
                      {"lhs", r.lhs},
                      {"rhs", r.rhs},
                      {"margin", r.margin}});
}

Json to_json(const ThreePointVerdict& v) {
  const auto& r = v.report;
  Json spectra = Json::array(), branches = Json::array();
  for (const auto& s : r.spectra) spectra.push_back(to_json(s));
  for (const auto& b : r.branches) branches.push_back(branch_json(b));
  Json witness = nullptr;
  if (r.witness) {
    Json cands = Json::array();
    for (const auto& c : r.witness->candidates) cands.push_back(c.theta);
    witness = {{"k", r.witness->k},
               {"branch1_margin", r.witness->margin},
               {"branch2", "no theta0 found among the candidates"},
               {"theta_candidates", cands}};
  }
  return envelope(v, {{"spectra", spectra}, {"branches", branches}, {"witness", witness}});
}

Json to_json(const BaribeauKamaraVerdict& v) {
  const auto& r = v.report;
  auto opt = [](const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); };
  return envelope(v, {{"base", r.base},
                      {"pair", {r.j1, r.j2}},
                      {"nu", r.nu},
                      {"blaschke", to_json(r.blaschke)},
                      {"set1", to_json(r.set1)},
                      {"set2", to_json(r.set2)},
                      {"excluded", to_json(r.excluded)},
                      {"lhs", opt(r.lhs)},
                      {"rhs", r.rhs},
                      {"margin", opt(r.margin)}});
}

Json to_json(const ProperCertificate& c) {
  Json out = {{"proper", c.proper},
              {"grid",
               {{"radial", c.grid.radial},
                {"angular", c.grid.angular},
                {"max_radius", c.grid.max_radius},
                {"margin", c.grid.margin}}},
              {"min_distance", c.min_distance}};
  if (c.z) out["violation"] = {{"z", to_json(*c.z)}, {"w", to_json(*c.w)}};
  return out;
}

Json to_json(const Tolerances& t) {
  return {{"cluster_tol", t.cluster_tol},   {"multiplicity_tol", t.multiplicity_tol},
          {"rank_tol", t.rank_tol},         {"drop_tol", t.drop_tol},
          {"report_tol", t.report_tol},     {"residual_tol", t.residual_tol},
          {"max_iterations", t.max_iterations}, {"order_cap", t.order_cap},
          {"strict", t.strict}};
}

}  // namespace specpick::io
