#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isoprofile/config.hpp"
#include "isoprofile/graph.hpp"

namespace isoprofile {

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitAssertion = 2, kExitBudget = 3 };

/// Typed view of the keys every command understands. Each key can come from
/// the config file or from a command-line flag of the same name.
struct ExperimentConfig {
  std::string graph;
  int n = 10;
  std::optional<double> lambda;
  std::optional<double> calib_c;
  int seeds = 50;
  std::uint64_t seed = 1;
  std::string out;      // empty writes to the output stream
  std::string format;   // "csv" or "json"; empty picks the command default
  /// "auto" uses the generator's edge orbits, "none" disables the hint,
  /// otherwise pairs "u,v" separated by ';'.
  std::string transitive_pair = "auto";
  std::optional<std::uint64_t> budget;

  static ExperimentConfig from(const Config& cfg);
};

inline const std::vector<std::string>& default_audit_suite() {
  static const std::vector<std::string> suite{
      "curvature-isoperimetry", "expectation-median", "info-green",    "lemma-tail",
      "ms-tv-bound",            "supermultiplicativity", "tail-info-green", "triangle-lemma",
      "tv-conditioning",        "tv-monotone",          "tvtilde",         "upper-tail"};
  return suite;
}

/// Runs one of gen, profile, curvature, partition, audit, scaling. Data goes
/// to `out` (or the configured file, written atomically); a one-line summary
/// goes to `log`. Returns an ExitCode.
int run_command(const std::string& command, const Config& cfg, std::ostream& out, std::ostream& log);

}  // namespace isoprofile
