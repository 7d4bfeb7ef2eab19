#pragma once

#include "srgft/checks.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace srgft {

struct RunConfig {
  int degree = 48;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  Mode mode = Mode::Exact;
  int random = 5;
  int jobs = 1;
  std::vector<double> radii = SamplingGrid::default_radii();
  int units = 9;
  int angles = 24;

  /// Validates the invariants (degree >= 8, tolerance > 0, nonempty grid).
  CheckConfig check_config() const;
};

struct Task {
  std::string suite;
  std::string check;
  std::string function;
  std::function<CheckReport()> run;
};

/// Suites in declaration order.
const std::vector<std::string>& suite_names();
/// All check ids.
const std::vector<std::string>& check_names();
/// "all", a suite name or a check id.
bool is_known_selection(std::string_view selection);

/// Tasks of the selection over the built-in extremals and `config.random`
/// seeded members per family. Throws PreconditionError on unknown names.
std::vector<Task> build_tasks(std::string_view selection, const RunConfig& config);

/// Runs tasks on `jobs` workers; the result order is the task order.
/// Exceptions inside a task become failed reports.
std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, int jobs);

}  // namespace srgft
