#include "specpick/commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "specpick/sampling.hpp"

namespace specpick::cli {
namespace {

using io::Json;

Json config_json(const RunConfig& cfg) {
  Json c = io::to_json(cfg.tol);
  c["properness_margin"] = cfg.properness_margin;
  c["seed"] = cfg.seed;
  c["pairs"] = cfg.pairs;
  c["oracle"] = cfg.oracle;
  return c;
}

Json make_report(const std::string& command, const RunConfig& cfg, const std::string& digest, Json payload,
                 const std::vector<std::string>& warnings) {
  return {{"command", command},
          {"config", config_json(cfg)},
          {"input_digest", digest},
          {"payload", std::move(payload)},
          {"warnings", warnings}};
}

Json error_json(const std::exception& e) {
  Json out = {{"type", "Error"}, {"message", e.what()}};
  if (const auto* s = dynamic_cast<const io::SchemaError*>(&e)) {
    out["type"] = "SchemaError";
    out["path"] = s->path();
  } else if (const auto* c = dynamic_cast<const ConstraintError*>(&e)) {
    out["type"] = "ConstraintError";
    out["failed"] = c->failed();
  } else if (const auto* p = dynamic_cast<const ProperViolation*>(&e)) {
    out["type"] = "ProperViolation";
    out["z"] = io::to_json(p->z());
    out["w"] = io::to_json(p->w());
  } else if (const auto* n = dynamic_cast<const NonConvergence*>(&e)) {
    out["type"] = "NonConvergence";
    out["residual"] = n->residual();
  } else if (dynamic_cast<const DomainError*>(&e)) {
    out["type"] = "DomainError";
  } else if (dynamic_cast<const IllConditioned*>(&e)) {
    out["type"] = "IllConditioned";
  } else if (dynamic_cast<const AmbiguityError*>(&e)) {
    out["type"] = "AmbiguityError";
  } else if (dynamic_cast<const InvalidArgument*>(&e)) {
    out["type"] = "InvalidArgument";
  }
  return out;
}

// Targets must lie in the spectral unit ball; report the offending path.
void validate_points(const std::vector<DataPoint>& pts, const Tolerances& tol) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    try {
      pts[i].validate(tol);
    } catch (const DomainError& e) {
      throw io::SchemaError("$.points[" + std::to_string(i) + "].target", e.what());
    }
  }
}

int status_code(Status s) { return s == Status::Infeasible ? 2 : 0; }

bool same_minpoly(const SpectralData& a, const SpectralData& b, double tol) {
  if (a.entries.size() != b.entries.size()) return false;
  for (const auto& e : a.entries) {
    const SpectralEntry* m = b.find(e.eigenvalue, tol);
    if (!m || m->exponent != e.exponent) return false;
  }
  return true;
}

std::string read_input(const std::string& path) {
  std::ostringstream s;
  if (path == "-") {
    s << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot read input file '" + path + "'");
    s << f.rdbuf();
  }
  return s.str();
}

constexpr double kMatchTol = 1e-6;

}  // namespace

Outcome cmd_check2(const std::string& input, const RunConfig& cfg) {
  const auto pts = io::parse_points(io::parse_text(input), 2, "$");
  validate_points(pts, cfg.tol);
  const TwoPointVerdict v = check_two_point(pts[0], pts[1], cfg.tol);
  return {status_code(v.status),
          make_report("check2", cfg, io::digest_string(input), io::to_json(v), v.borderline ? v.notes : std::vector<std::string>{})};
}

Outcome cmd_check3(const std::string& input, const Check3Options& opt, const RunConfig& cfg) {
  const auto pts = io::parse_points(io::parse_text(input), 3, "$");
  validate_points(pts, cfg.tol);
  const ThreePointData data{{pts[0], pts[1], pts[2]}};
  std::vector<std::string> warnings;
  if (!opt.bk) {
    if (opt.nu || opt.base) warnings.push_back("--nu and --base apply only with --bk");
    const ThreePointVerdict v = check_three_point(data, cfg.tol);
    if (v.borderline) warnings.push_back("a branch decision is within tolerance of its threshold");
    return {status_code(v.status), make_report("check3", cfg, io::digest_string(input), io::to_json(v), warnings)};
  }
  Json results = Json::array();
  Status overall = Status::Inconclusive;
  for (int base = 1; base <= 3; ++base) {
    if (opt.base && *opt.base != base) continue;
    const BaribeauKamaraVerdict v = check_baribeau_kamara(data, base, opt.nu, cfg.tol);
    if (v.infeasible()) overall = Status::Infeasible;
    if (v.borderline) warnings.push_back("base " + std::to_string(base) + ": decision within tolerance");
    results.push_back(io::to_json(v));
  }
  Json payload = {{"status", to_string(overall)}, {"bases", results}};
  return {status_code(overall), make_report("check3 --bk", cfg, io::digest_string(input), payload, warnings)};
}

Outcome cmd_example(const ExampleOptions& opt, const RunConfig& cfg) {
  Json args = {{"n", opt.n}, {"a", io::to_json(opt.a)}, {"b", io::to_json(opt.b)}};
  if (opt.beta) args["beta"] = io::to_json(*opt.beta);
  if (opt.alpha) args["alpha"] = io::to_json(*opt.alpha);
  const std::string digest = io::digest_string(args.dump());
  auto constraints_json = [](const std::vector<ConstraintCheck>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back({{"name", c.name}, {"passed", c.passed}});
    return out;
  };
  try {
    const ExampleData ex = generate_example(opt.n, opt.a, opt.b, opt.beta, opt.alpha, cfg.tol);
    Json payload = {{"n", opt.n},
                    {"a", io::to_json(opt.a)},
                    {"b", io::to_json(opt.b)},
                    {"alpha", io::to_json(ex.alpha)},
                    {"beta", io::to_json(ex.beta)},
                    {"beta_interval", {{"lower", ex.lower}, {"upper", ex.upper}}},
                    {"constraints", constraints_json(ex.constraints)},
                    {"data", io::to_json(ex.data)}};
    return {0, make_report("example", cfg, digest, payload, {})};
  } catch (const ConstraintError& e) {
    Json payload = {{"n", opt.n}, {"a", io::to_json(opt.a)}, {"b", io::to_json(opt.b)}};
    if (opt.beta) payload["constraints"] = constraints_json(example_constraints(opt.n, opt.a, opt.b, *opt.beta, cfg.tol));
    Json report = make_report("example", cfg, digest, payload, {});
    report["error"] = error_json(e);
    return {1, report};
  }
}

Outcome cmd_funcalc(const std::optional<std::string>& input, const RunConfig& cfg) {
  if (!input) {
    if (cfg.oracle < 1) throw InvalidArgument("funcalc: give an input file or --oracle N");
    sampling::Rng rng(cfg.seed);
    int mismatches = 0, errors = 0;
    Json failures = Json::array();
    for (int trial = 0; trial < cfg.oracle; ++trial) {
      const sampling::OracleTrial t = sampling::random_oracle_trial(rng);
      try {
        const SpectralData pred = predicted_minpoly(t.f, t.spec.spectral_data(), cfg.tol);
        const SpectralData got = minimal_polynomial(apply(t.f, t.spec, cfg.tol), cfg.tol);
        if (!same_minpoly(pred, got, kMatchTol)) {
          ++mismatches;
          if (failures.size() < 10)
            failures.push_back({{"trial", trial}, {"A", io::to_json(t.spec)}, {"predicted", io::to_json(pred)},
                                {"computed", io::to_json(got)}});
        }
      } catch (const Error& e) {
        ++errors;
        if (failures.size() < 10) failures.push_back({{"trial", trial}, {"A", io::to_json(t.spec)}, {"error", error_json(e)}});
      }
    }
    Json payload = {{"trials", cfg.oracle}, {"mismatches", mismatches}, {"errors", errors}, {"failures", failures}};
    std::vector<std::string> warnings;
    if (mismatches + errors > 0) warnings.push_back("oracle sweep found disagreements");
    const std::string digest = io::digest_string("oracle:" + std::to_string(cfg.oracle) + ":" + std::to_string(cfg.seed));
    return {mismatches + errors > 0 ? 1 : 0, make_report("funcalc --oracle", cfg, digest, payload, warnings)};
  }

  const Json j = io::parse_text(*input);
  const HoloFn f = io::parse_function(j.contains("f") ? j["f"] : Json{{"kind", "identity"}}, "$.f");
  if (!j.contains("A")) throw io::SchemaError("$.A", "missing");
  SpectralData data;
  Matrix fa;
  Json a_json;
  if (j["A"].is_object()) {
    const JordanSpec s = io::parse_jordan(j["A"], "$.A");
    data = s.spectral_data();
    fa = apply(f, s, cfg.tol);
    a_json = io::to_json(s);
  } else {
    const Matrix a = io::parse_matrix(j["A"], "$.A");
    data = minimal_polynomial(a, cfg.tol);
    fa = apply(f, a, cfg.tol);
    a_json = io::to_json(a);
  }
  const SpectralData pred = predicted_minpoly(f, data, cfg.tol);
  const SpectralData got = minimal_polynomial(fa, cfg.tol);
  const bool match = same_minpoly(pred, got, kMatchTol);
  Json payload = {{"A", a_json},
                  {"minimal_polynomial_A", io::to_json(data)},
                  {"fA", io::to_json(fa)},
                  {"predicted", io::to_json(pred)},
                  {"computed", io::to_json(got)},
                  {"match", match}};
  std::vector<std::string> warnings;
  if (!match) warnings.push_back("predicted and computed minimal polynomials differ");
  return {match ? 0 : 1, make_report("funcalc", cfg, io::digest_string(*input), payload, warnings)};
}

Outcome cmd_corres(const std::string& input, const RunConfig& cfg) {
  const Correspondence g = io::parse_correspondence(io::parse_text(input), "$");
  const std::string digest = io::digest_string(input);
  ProperGrid grid;
  grid.margin = cfg.properness_margin;
  const ProperCertificate cert = validate_properness(g, grid, cfg.tol);
  Json payload = {{"correspondence", io::to_json(g)}, {"properness", io::to_json(cert)}};
  if (!cert.proper) {
    Json report = make_report("corres", cfg, digest, payload, {"properness certificate failed"});
    report["error"] = {{"type", "ProperViolation"},
                       {"message", "fibre point closer to the boundary than the margin"},
                       {"z", io::to_json(*cert.z)},
                       {"w", io::to_json(*cert.w)}};
    return {1, report};
  }

  sampling::Rng rng(cfg.seed);
  double min_product = 1.0, min_hausdorff = 1.0, min_consistency = 1.0;
  std::ostringstream csv;
  csv.precision(17);
  csv << "zeta1_re,zeta1_im,zeta2_re,zeta2_im,product_slack,hausdorff_slack,consistency\n";
  for (int k = 0; k < cfg.pairs; ++k) {
    const Cplx z1 = sampling::random_in_disc(rng, 0.99), z2 = sampling::random_in_disc(rng, 0.99);
    const SchwarzProductReport p = check_schwarz_product(g, z1, z2, cfg.tol);
    const SchwarzHausdorffReport h = check_schwarz_hausdorff(g, z1, z2, cfg.tol);
    const double consistency = p.lhs - h.lhs_power;
    min_product = std::min(min_product, p.slack);
    min_hausdorff = std::min(min_hausdorff, h.slack);
    min_consistency = std::min(min_consistency, consistency);
    csv << z1.real() << ',' << z1.imag() << ',' << z2.real() << ',' << z2.imag() << ',' << p.slack << ','
        << h.slack << ',' << consistency << '\n';
  }
  payload["pairs"] = cfg.pairs;
  payload["min_product_slack"] = min_product;
  payload["min_hausdorff_slack"] = min_hausdorff;
  payload["min_consistency"] = min_consistency;
  payload["csv"] = csv.str();
  std::vector<std::string> warnings;
  const bool ok = min_product >= -cfg.tol.report_tol && min_hausdorff >= -cfg.tol.report_tol &&
                  min_consistency >= -cfg.tol.report_tol;
  if (!ok) warnings.push_back("negative slack beyond report_tol");
  return {ok ? 0 : 1, make_report("corres", cfg, digest, payload, warnings)};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::optional<std::uint64_t> seed_flag;
  std::string input, out_path;
  Check3Options c3;
  ExampleOptions ex;
  std::string a_text = "0.5", b_text = "0.7", beta_text, alpha_text;

  CLI::App app{"Spectral Nevanlinna-Pick feasibility certifiers"};
  app.require_subcommand(1);
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--cluster-tol", cfg.tol.cluster_tol)->check(CLI::PositiveNumber);
    sub->add_option("--multiplicity-tol", cfg.tol.multiplicity_tol)->check(CLI::PositiveNumber);
    sub->add_option("--rank-tol", cfg.tol.rank_tol)->check(CLI::PositiveNumber);
    sub->add_option("--drop-tol", cfg.tol.drop_tol)->check(CLI::PositiveNumber);
    sub->add_option("--report-tol", cfg.tol.report_tol)->check(CLI::PositiveNumber);
    sub->add_option("--residual-tol", cfg.tol.residual_tol)->check(CLI::PositiveNumber);
    sub->add_option("--max-iterations", cfg.tol.max_iterations)->check(CLI::PositiveNumber);
    sub->add_option("--properness-margin", cfg.properness_margin)->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed_flag);
    sub->add_flag("--strict", cfg.tol.strict);
  };

  auto* check2 = app.add_subcommand("check2", "two-point condition");
  check2->add_option("input", input, "JSON file with two data points, or -")->required();
  add_config(check2);

  auto* check3 = app.add_subcommand("check3", "three-point condition");
  check3->add_option("input", input, "JSON file with three data points, or -")->required();
  check3->add_flag("--bk", c3.bk, "run the Baribeau-Kamara condition instead");
  check3->add_option("--nu", c3.nu, "exponent for --bk (default n)")->check(CLI::PositiveNumber);
  check3->add_option("--base", c3.base, "base index for --bk (default: all)")->check(CLI::Range(1, 3));
  add_config(check3);

  auto* example = app.add_subcommand("example", "build example data that separates the conditions");
  example->add_option("--n", ex.n, "matrix size, at least 4");
  example->add_option("--a", a_text, "node a: number or [re, im]");
  example->add_option("--b", b_text, "node b: number or [re, im]");
  example->add_option("--beta", beta_text, "JSON list of n diagonal entries");
  example->add_option("--alpha", alpha_text, "JSON list of n nilpotent coefficients");
  example->add_option("--out", out_path, "write the data set here");
  add_config(example);

  auto* funcalc = app.add_subcommand("funcalc", "f(A) and its minimal polynomial");
  funcalc->add_option("input", input, "JSON file {\"f\": ..., \"A\": ...}, or -");
  funcalc->add_option("--oracle", cfg.oracle, "run N random oracle trials")->check(CLI::PositiveNumber);
  add_config(funcalc);

  auto* corres = app.add_subcommand("corres", "Schwarz lemma sweep for a correspondence");
  corres->add_option("input", input, "JSON correspondence, or -")->required();
  corres->add_option("--pairs", cfg.pairs, "number of sampled node pairs")->check(CLI::PositiveNumber);
  add_config(corres);

  std::string command = "specpick";
  auto fail = [&](const std::exception& e) {
    err << "error: " << e.what() << '\n';
    Json report = {{"command", command}, {"config", config_json(cfg)}, {"input_digest", nullptr},
                   {"payload", nullptr}, {"warnings", Json::array()}, {"error", error_json(e)}};
    out << report.dump(2) << '\n';
    return 1;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(std::runtime_error(e.what()));
  }

  try {
    if (const char* env = std::getenv("SPECPICK_SEED")) {
      try {
        cfg.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw InvalidArgument(std::string("SPECPICK_SEED is not an unsigned integer: '") + env + "'");
      }
    }
    if (seed_flag) cfg.seed = *seed_flag;

    Outcome o;
    if (check2->parsed()) {
      command = "check2";
      o = cmd_check2(read_input(input), cfg);
    } else if (check3->parsed()) {
      command = "check3";
      o = cmd_check3(read_input(input), c3, cfg);
    } else if (example->parsed()) {
      command = "example";
      ex.a = io::parse_complex(io::parse_text(a_text), "--a");
      ex.b = io::parse_complex(io::parse_text(b_text), "--b");
      auto list = [](const std::string& text, const char* flag) {
        std::vector<Cplx> v;
        const Json j = io::parse_text(text);
        if (!j.is_array()) throw io::SchemaError(flag, "expected a JSON list");
        for (std::size_t i = 0; i < j.size(); ++i)
          v.push_back(io::parse_complex(j[i], std::string(flag) + "[" + std::to_string(i) + "]"));
        return v;
      };
      if (!beta_text.empty()) ex.beta = list(beta_text, "--beta");
      if (!alpha_text.empty()) ex.alpha = list(alpha_text, "--alpha");
      o = cmd_example(ex, cfg);
      if (o.exit_code == 0 && !out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw InvalidArgument("cannot write '" + out_path + "'");
        f << o.report["payload"]["data"].dump(2) << '\n';
      }
    } else if (funcalc->parsed()) {
      command = "funcalc";
      o = cmd_funcalc(input.empty() ? std::nullopt : std::optional<std::string>(read_input(input)), cfg);
    } else {
      command = "corres";
      o = cmd_corres(read_input(input), cfg);
    }
    for (const auto& w : o.report["warnings"]) err << "warning: " << w.get<std::string>() << '\n';
    if (o.report.contains("error")) err << "error: " << o.report["error"]["message"].get<std::string>() << '\n';
    out << o.report.dump(2) << '\n';
    return o.exit_code;
  } catch (const std::exception& e) {
    return fail(e);
  }
}

}  // namespace specpick::cli
