#pragma once

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "fleetic/availability.hpp"
#include "fleetic/solver.hpp"

namespace fleetic {

/// Planning scenarios:
///   1  evaluate the baseline deployment as is
///   2  re-place teams with the baseline's base set frozen
///   3  optimize bases and teams over all candidate sites
///   4  as 3, counting a call only when b_u teams are in range
///   5  add extra teams and place only them, baseline teams fixed
///   6  add extra teams and optimize everything
struct ScenarioConfig {
  int scenario = 3;
  std::optional<Deployment> baseline;        // required by 1, 2 and 5
  std::map<std::string, int> extra_teams;    // 0-3 per type, scenarios 5 and 6
  std::optional<double> theta;               // with busy_fractions, gives b_u
  std::map<std::string, double> busy_fractions;
  std::map<std::string, int> required_teams;  // explicit b_u, overrides theta
  SolveOptions solve;
};

/// Throws ValidationError when a scenario-specific field is missing or
/// out of range. Run before any solve.
void validate_scenario(const Instance& instance, const ScenarioConfig& config);

struct ScenarioReport {
  int scenario = 0;
  Deployment deployment;
  CoverageReport report;
  std::optional<ProofStatus> proof;  // empty when nothing was optimized
  std::optional<CoverageReport> baseline_report;
  std::map<std::string, int> required_teams;
  std::map<std::string, int> fleet;  // fleet sizes after extra teams
  double wall_time_s = 0.0;

  /// Covered calls minus the baseline's, when a baseline was given.
  std::optional<std::int64_t> delta_calls() const;
};

ScenarioReport run_scenario(const Instance& instance, const ScenarioConfig& config);

nlohmann::json scenario_report_to_json(const Instance& instance, const ScenarioReport& report);

}  // namespace fleetic
