#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "specpick/commands.hpp"

using specpick::io::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "specpick");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = specpick::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(SPECPICK_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("check2: exit codes") {
  const Run zeros = run({"check2", fixture("zeros2.json")});
  CHECK(zeros.code == 0);
  const Json r = zeros.json();
  CHECK(r["command"] == "check2");
  CHECK(r["payload"]["status"] == "Inconclusive");
  CHECK(r["payload"]["report"]["lhs"] == 0.0);
  CHECK(r["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK(r["config"]["report_tol"] == 1e-9);

  const Run bad = run({"check2", fixture("schwarz_violation2.json")});
  CHECK(bad.code == 2);
  CHECK(bad.json()["payload"]["status"] == "Infeasible");

  const Run node = run({"check2", fixture("bad_node2.json")});
  CHECK(node.code == 1);
  CHECK(node.json()["error"]["path"] == "$.points[1].node");
  CHECK(node.err.find("points[1].node") != std::string::npos);
}

TEST_CASE("check3: constant data, example data and the BK flag") {
  CHECK(run({"check3", fixture("constant3.json")}).code == 0);

  const std::string path = std::string(SPECPICK_SCRATCH) + "/example4.json";
  const Run ex = run({"example", "--n", "4", "--a", "0.5", "--b", "0.7", "--out", path});
  REQUIRE(ex.code == 0);
  for (const auto& c : ex.json()["payload"]["constraints"]) CHECK(c["passed"] == true);

  const Run c3 = run({"check3", path});
  CHECK(c3.code == 2);
  const Json w = c3.json()["payload"]["report"]["witness"];
  CHECK(w["k"] == 1);
  CHECK(w["branch1_margin"].get<double>() > 0.0);
  CHECK(c3.json()["payload"]["report"]["branches"].size() == 3);

  const Run bk = run({"check3", path, "--bk"});
  CHECK(bk.code == 0);
  CHECK(bk.json()["payload"]["bases"].size() == 3);
  const Run one = run({"check3", path, "--bk", "--base", "2"});
  CHECK(one.code == 0);
  CHECK(one.json()["payload"]["bases"].size() == 1);
  CHECK(run({"check3", path, "--bk", "--base", "1", "--nu", "1"}).code == 2);
  CHECK(run({"check3", path, "--bk", "--base", "4"}).code == 1);
}

TEST_CASE("example: rejected parameters") {
  CHECK(run({"example", "--n", "3"}).code == 1);
  const Run bad = run({"example", "--beta", "[0, 0.3, 0.4, 0.75]"});
  CHECK(bad.code == 1);
  const Json r = bad.json();
  CHECK(r["error"]["type"] == "ConstraintError");
  REQUIRE(r["payload"]["constraints"].size() == 7);
  CHECK(r["payload"]["constraints"][3]["name"] == "|beta_i| < |b|");
  CHECK(r["payload"]["constraints"][3]["passed"] == false);
  CHECK(r["payload"]["constraints"][1]["passed"] == true);
  CHECK(run({"example", "--a", "[0.5, 0.1"}).code == 1);
}

TEST_CASE("funcalc: file and oracle modes") {
  const Run id = run({"funcalc", fixture("funcalc_identity.json")});
  CHECK(id.code == 0);
  CHECK(id.json()["payload"]["fA"] == id.json()["payload"]["A"]);
  const Run sq = run({"funcalc", fixture("funcalc_square.json")});
  CHECK(sq.code == 0);
  const Json p = sq.json()["payload"];
  CHECK(p["predicted"][0]["exponent"] == 2);
  CHECK(p["computed"][0]["exponent"] == 2);
  const Run oracle = run({"funcalc", "--oracle", "200", "--seed", "3"});
  CHECK(oracle.code == 0);
  CHECK(oracle.json()["payload"]["trials"] == 200);
  CHECK(run({"funcalc"}).code == 1);
}

TEST_CASE("corres: sweeps and properness") {
  const Run q = run({"corres", fixture("corres_quarter.json"), "--pairs", "1000"});
  CHECK(q.code == 0);
  const Json p = q.json()["payload"];
  CHECK(p["min_product_slack"].get<double>() >= -1e-9);
  CHECK(p["min_hausdorff_slack"].get<double>() >= -1e-9);
  CHECK(p["properness"]["proper"] == true);
  const std::string csv = p["csv"];
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1001);

  const Run v = run({"corres", fixture("corres_sqrt_unit.json")});
  CHECK(v.code == 1);
  CHECK(v.json()["error"]["type"] == "ProperViolation");

  CHECK(run({"corres", fixture("corres_graph.json"), "--pairs", "300"}).code == 0);
}

TEST_CASE("reports are reproducible and seeds resolve flag over environment") {
  const std::vector<std::string> args{"corres", fixture("corres_graph.json"), "--pairs", "50"};
  ::setenv("SPECPICK_SEED", "11", 1);
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.json()["config"]["seed"] == 11);
  std::vector<std::string> flagged = args;
  flagged.insert(flagged.end(), {"--seed", "4"});
  CHECK(run(flagged).json()["config"]["seed"] == 4);
  ::setenv("SPECPICK_SEED", "eleven", 1);
  CHECK(run(args).code == 1);
  ::unsetenv("SPECPICK_SEED");
  CHECK(run(args).json()["config"]["seed"] == 0);
}

TEST_CASE("every failure is a JSON report with exit 1") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"bogus"}, {"check2"}, {"check2", "/no/such/file.json"}, {"check2", fixture("constant3.json")},
           {"check3", fixture("zeros2.json")}, {"corres", fixture("zeros2.json")}, {"check2", "--cluster-tol", "-1", fixture("zeros2.json")}}) {
    const Run r = run(args);
    INFO(r.err);
    CHECK(r.code == 1);
    const Json j = Json::parse(r.out);
    CHECK(j.contains("error"));
    CHECK(j.contains("warnings"));
  }
}
