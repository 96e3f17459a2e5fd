#pragma once

#include <optional>
#include <string>

namespace asymfp {

/// Result of one scenario run. Exit codes: 0 = positive verdict, 1 = the
/// task completed with a negative verdict (diverged, violations found,
/// approximant not found), 2 = input error.
struct ScenarioOutcome {
  int exit_code = 2;
  std::string summary_json;  // canonical one-document summary, newline-terminated
  std::optional<std::string> trace_path;
};

ScenarioOutcome run_scenario_file(const std::string& path);

struct SuiteOutcome {
  int exit_code = 2;
  std::string aggregate_json;  // filename -> summary, filenames sorted
};

/// Runs every *.scenario.json in the directory in filename order.
SuiteOutcome run_suite(const std::string& dir);

}  // namespace asymfp
