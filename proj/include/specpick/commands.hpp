#pragma once

#include <iosfwd>
#include <optional>

#include "specpick/io.hpp"

namespace specpick::cli {

/// Tolerances plus sampling controls shared by every command.
struct RunConfig {
  Tolerances tol;
  double properness_margin = 1e-3;
  std::uint64_t seed = 0;
  int pairs = 1000;
  int oracle = 0;
};

/// Exit status and JSON report of one command.
/// 0: ran, nothing certified; 1: input or numerical error; 2: certified Infeasible.
struct Outcome {
  int exit_code = 0;
  io::Json report;
};

struct Check3Options {
  bool bk = false;
  std::optional<int> nu;
  std::optional<int> base;
};

struct ExampleOptions {
  int n = 4;
  Cplx a = 0.5, b = 0.7;
  std::optional<std::vector<Cplx>> beta, alpha;
};

Outcome cmd_check2(const std::string& input, const RunConfig& cfg);
Outcome cmd_check3(const std::string& input, const Check3Options& opt, const RunConfig& cfg);
/// The payload's "data" member is itself a valid check3 input.
Outcome cmd_example(const ExampleOptions& opt, const RunConfig& cfg);
Outcome cmd_funcalc(const std::optional<std::string>& input, const RunConfig& cfg);
Outcome cmd_corres(const std::string& input, const RunConfig& cfg);

/// Parses arguments, runs one command, writes the report to `out` and
/// diagnostics to `err`. SPECPICK_SEED replaces the default seed; --seed wins over both.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace specpick::cli
