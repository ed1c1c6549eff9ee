#include "fleetic/scenario.hpp"

#include "fleetic/error.hpp"
#include "fleetic/solution_io.hpp"

namespace fleetic {

namespace {

std::map<std::string, int> resolve_requirement(const ScenarioConfig& config) {
  if (!config.required_teams.empty()) return config.required_teams;
  if (config.theta) {
    return requirement_from_busy_fractions(config.busy_fractions, *config.theta).required;
  }
  return {};
}

Instance with_extra_teams(const Instance& instance, const std::map<std::string, int>& extra) {
  InstanceDescription raw = instance.description();
  for (auto& t : raw.team_types) {
    if (auto it = extra.find(t.id); it != extra.end()) t.fleet_size += it->second;
  }
  return validate_instance(std::move(raw));
}

}  // namespace

std::optional<std::int64_t> ScenarioReport::delta_calls() const {
  if (!baseline_report) return std::nullopt;
  return report.covered_demand - baseline_report->covered_demand;
}

void validate_scenario(const Instance& instance, const ScenarioConfig& config) {
  const int s = config.scenario;
  if (s < 1 || s > 6) throw ValidationError("scenario must be 1-6");
  if ((s == 1 || s == 2 || s == 5) && !config.baseline) {
    throw ValidationError("scenario " + std::to_string(s) + " needs a baseline deployment");
  }
  if (config.baseline) check_deployment(instance, *config.baseline);
  for (const auto& [type, n] : config.extra_teams) {
    if (!instance.type_index(type)) {
      throw ValidationError("extra teams name unknown team type '" + type + "'");
    }
    if (n < 0 || n > 3) {
      throw ValidationError("extra teams for '" + type + "' must be 0-3, got " +
                            std::to_string(n));
    }
  }
  if ((s == 5 || s == 6) && config.extra_teams.empty()) {
    throw ValidationError("scenario " + std::to_string(s) + " needs extra teams");
  }
  if (s == 4) {
    if (config.required_teams.empty() && !config.theta) {
      throw ValidationError("scenario 4 needs a confidence level or explicit required teams");
    }
    if (config.required_teams.empty()) {
      for (const auto& t : instance.team_types()) {
        if (!config.busy_fractions.contains(t.id)) {
          throw ValidationError("scenario 4 needs a busy fraction for team type '" + t.id + "'");
        }
      }
    }
  }
  for (const auto& [type, q] : config.busy_fractions) {
    if (!instance.type_index(type)) {
      throw ValidationError("busy fraction names unknown team type '" + type + "'");
    }
  }
  for (const auto& [type, b] : resolve_requirement(config)) {
    if (!instance.type_index(type)) {
      throw ValidationError("required teams name unknown team type '" + type + "'");
    }
    if (b < 1) throw ValidationError("required teams must be >= 1");
  }
}

ScenarioReport run_scenario(const Instance& instance, const ScenarioConfig& config) {
  validate_scenario(instance, config);
  const int s = config.scenario;

  ScenarioReport out;
  out.scenario = s;
  out.required_teams = resolve_requirement(config);

  const Instance solved_on =
      (s == 5 || s == 6) ? with_extra_teams(instance, config.extra_teams) : instance;
  for (const auto& t : solved_on.team_types()) out.fleet[t.id] = t.fleet_size;
  const CoverMatrix cover = build_cover_matrix(solved_on);

  ReliabilityRequirement requirement;
  requirement.theta = config.theta;
  requirement.required = out.required_teams;

  if (config.baseline) {
    out.baseline_report = evaluate_b_coverage(solved_on, cover, *config.baseline, requirement);
  }

  SolveOptions options = config.solve;
  options.required_teams = out.required_teams;
  switch (s) {
    case 1:
      out.deployment = *config.baseline;
      out.report = *out.baseline_report;
      return out;
    case 2:
      options.fixed_bases = config.baseline->open_bases;
      break;
    case 5:
      options.fixed_placements = config.baseline->placements;
      break;
    default:
      break;
  }
  const SolveResult result = solve(solved_on, cover, options);
  out.deployment = result.deployment;
  out.report = result.report;
  out.proof = result.proof;
  out.wall_time_s = result.wall_time_s;
  return out;
}

nlohmann::json scenario_report_to_json(const Instance& instance, const ScenarioReport& report) {
  nlohmann::json doc;
  doc["scenario"] = report.scenario;
  doc["covered_calls"] = report.report.covered_demand;
  doc["total_calls"] = report.report.total_demand;
  doc["tx_cob"] = report.report.tx_cob;
  doc["open_bases"] = report.report.open_base_count;
  nlohmann::json per_type = nlohmann::json::object();
  for (std::size_t u = 0; u < instance.num_types(); ++u) {
    const auto total = report.report.demand_by_type[u];
    const auto covered = report.report.covered_by_type[u];
    per_type[instance.team_types()[u].id] = {
        {"covered", covered},
        {"total", total},
        {"rate", total > 0 ? static_cast<double>(covered) / static_cast<double>(total) : 0.0}};
  }
  doc["per_type"] = std::move(per_type);
  doc["fleet"] = report.fleet;
  doc["required_teams"] = report.required_teams;
  doc["proof"] = report.proof ? nlohmann::json(to_string(*report.proof)) : nlohmann::json(nullptr);
  if (report.baseline_report) {
    doc["baseline_covered_calls"] = report.baseline_report->covered_demand;
    doc["baseline_tx_cob"] = report.baseline_report->tx_cob;
    doc["delta_calls"] = *report.delta_calls();
    doc["delta_tx_cob"] = report.report.tx_cob - report.baseline_report->tx_cob;
  }
  doc["deployment"] = deployment_to_json(report.deployment);
  doc["wall_time_s"] = report.wall_time_s;
  return doc;
}

}  // namespace fleetic
