#pragma once

// Named operations behind the command-line driver. Each returns a Report;
// options are string key/value pairs (field, preset, degree, seed, ...).

#include <map>
#include <string>
#include <vector>

#include "amalgam/report.hpp"

namespace amg {

struct ScenarioOptions {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }
  std::string get(const std::string& key, const std::string& fallback) const;
  /// Throws InputError when the value is not an integer.
  long get_int(const std::string& key, long fallback) const;
};

/// "amalgam coherent-dim", "amalgam verify-hopf", "amalgam rank", "reps glue",
/// "reps hom", "reps sl2-cert", "frobplus check", "frobplus faithful",
/// "topo monodromy", "topo svk", "topo models", "suite".
std::vector<std::string> command_names();

/// Throws InputError for unknown commands or malformed options.
Report run_command(const std::string& command, const ScenarioOptions& options);

/// The acceptance scenarios, in order.
std::vector<std::string> suite_scenarios();
Report run_suite_scenario(const std::string& name, const ScenarioOptions& options);
Report run_suite(const ScenarioOptions& options);

}  // namespace amg
