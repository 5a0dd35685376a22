// Command-line front end for the experiment runner.
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isoprofile/config.hpp"
#include "isoprofile/errors.hpp"
#include "isoprofile/experiments.hpp"

namespace {

struct Flags {
  std::map<std::string, std::string> values;
  std::string config_path;
  std::vector<std::string> extra;
};

void add_flags(CLI::App* cmd, Flags& flags) {
  static const std::vector<std::pair<std::string, std::string>> keys{
      {"graph", "graph spec, e.g. torus:16,16 or edges:path"},
      {"n", "walk horizon"},
      {"lambda", "good-event parameter (overrides calibration)"},
      {"calib-c", "calibration constant C"},
      {"seeds", "number of seeds"},
      {"seed", "64-bit root seed"},
      {"out", "output path (written atomically); stdout when absent"},
      {"format", "csv or json"},
      {"transitive-pair", "auto, none, or u,v pairs separated by ';'"},
      {"budget", "work budget for exact engines"},
  };
  for (const auto& [key, help] : keys) {
    cmd->add_option_function<std::string>("--" + key, [&flags, key = key](const std::string& v) { flags.values[key] = v; },
                                          help);
  }
  cmd->add_option("--config", flags.config_path, "key=value config file; flags override it");
  cmd->add_option("--set", flags.extra, "extra key=value setting, repeatable (e.g. audits=lemma-tail)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-walk profiles, curvature, tail audits and partition certificates"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"gen", "write a generated graph as an edge list"},
      {"profile", "TV, displacement and entropy profiles as CSV"},
      {"curvature", "exact Ollivier-Ricci curvature report"},
      {"partition", "search for a partition cell certificate"},
      {"audit", "run inequality audits"},
      {"scaling", "log-log exponent fit of a profile"},
  };
  for (const auto& [name, help] : commands) add_flags(app.add_subcommand(name, help), flags);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : isoprofile::kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  isoprofile::Config cfg;
  try {
    if (!flags.config_path.empty()) cfg = isoprofile::Config::load(flags.config_path);
    for (const auto& item : flags.extra) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw isoprofile::UsageError("--set expects key=value, got '" + item + "'");
      cfg.set(isoprofile::trim(item.substr(0, eq)), isoprofile::trim(item.substr(eq + 1)));
    }
  } catch (const isoprofile::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return isoprofile::kExitUsage;
  }
  for (const auto& [key, value] : flags.values) cfg.set(key, value);
  return isoprofile::run_command(command, cfg, std::cout, std::cerr);
}
