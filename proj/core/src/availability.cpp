#include "fleetic/availability.hpp"

#include <cmath>
#include <fstream>

#include "fleetic/csv.hpp"
#include "fleetic/error.hpp"

namespace fleetic {

double busy_fraction(const BusyFractionInput& input) {
  if (!(input.mean_service_hours > 0.0) || !std::isfinite(input.mean_service_hours)) {
    throw ValidationError("mean service time must be positive");
  }
  if (!(input.daily_calls >= 0.0) || !std::isfinite(input.daily_calls)) {
    throw ValidationError("daily calls must be non-negative");
  }
  if (input.fleet < 1) throw ValidationError("fleet must be at least 1");
  return input.mean_service_hours * input.daily_calls / (24.0 * input.fleet);
}

int min_teams(double q, double theta) {
  if (!(q > 0.0)) throw ValidationError("busy fraction must be positive");
  if (!(q < 1.0)) throw ValidationError("busy fraction >= 1: the system is saturated");
  if (!(theta > 0.0 && theta < 1.0)) throw ValidationError("confidence must lie in (0, 1)");
  const double ratio = std::log(1.0 - theta) / std::log(q);
  // Ratios a rounding error above an integer would otherwise round up a
  // whole team.
  const double nearest = std::round(ratio);
  const double b = std::abs(ratio - nearest) <= 1e-12 * std::max(1.0, nearest)
                       ? nearest
                       : std::ceil(ratio);
  return std::max(1, static_cast<int>(b));
}

ReliabilityRequirement requirement_from_busy_fractions(const std::map<std::string, double>& q,
                                                       double theta) {
  ReliabilityRequirement req;
  req.theta = theta;
  for (const auto& [type, fraction] : q) req.required[type] = min_teams(fraction, theta);
  return req;
}

namespace {

std::vector<int> dense_requirement(const Instance& instance,
                                   const ReliabilityRequirement& requirement) {
  std::vector<int> b(instance.num_types(), 1);
  for (const auto& [type, count] : requirement.required) {
    auto u = instance.type_index(type);
    if (!u) throw ValidationError("reliability requirement names unknown team type '" + type + "'");
    if (count < 1) throw ValidationError("required teams for '" + type + "' must be >= 1");
    b[*u] = count;
  }
  return b;
}

}  // namespace

CoverageReport evaluate_b_coverage(const Instance& instance, const CoverMatrix& cover,
                                   const Deployment& deployment,
                                   const ReliabilityRequirement& requirement) {
  const auto b = dense_requirement(instance, requirement);
  return evaluate_deployment(instance, cover, deployment, b);
}

SolveResult solve_b_coverage(const Instance& instance, const CoverMatrix& cover,
                             const ReliabilityRequirement& requirement,
                             const SolveOptions& options) {
  dense_requirement(instance, requirement);
  SolveOptions opts = options;
  opts.required_teams = requirement.required;
  return solve(instance, cover, opts);
}

void write_busy_fraction_csv(const std::vector<BusyFractionRow>& rows,
                             const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_busy_fraction_csv(rows, out);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_busy_fraction_csv(const std::vector<BusyFractionRow>& rows, std::ostream& out) {
  csv::write_record(out, {"period", "team_type", "mean_service_hours", "daily_calls", "fleet", "q",
                          "b_085", "b_090", "b_095"});
  for (const auto& r : rows) {
    std::vector<std::string> fields{r.period,
                                    r.team_type,
                                    csv::format_number(r.mean_service_hours),
                                    csv::format_number(r.daily_calls),
                                    std::to_string(r.fleet),
                                    csv::format_number(r.q)};
    for (double theta : kReportThetas) {
      auto it = r.b.find(theta);
      fields.push_back(it != r.b.end() && it->second ? std::to_string(*it->second) : "");
    }
    csv::write_record(out, fields);
  }
}

}  // namespace fleetic
