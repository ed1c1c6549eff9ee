#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fleetic/coverage.hpp"
#include "fleetic/solver.hpp"

namespace fleetic {

struct BusyFractionInput {
  double mean_service_hours = 0.0;  // full commit-to-release time per call
  double daily_calls = 0.0;         // calls per day across all demand points
  int fleet = 1;                    // teams available
};

/// Expected fraction of time a team is busy: t * calls / (24 * fleet).
double busy_fraction(const BusyFractionInput& input);

/// Smallest team count b with 1 - q^b >= theta, i.e.
/// ceil(log(1 - theta) / log(q)). Requires 0 < q < 1 and 0 < theta < 1.
int min_teams(double q, double theta);

/// Teams of each type that must be within range for a call to count.
struct ReliabilityRequirement {
  std::optional<double> theta;
  std::map<std::string, int> required;  // b_u per team type id
};

/// b_u from per-type busy fractions at confidence theta.
ReliabilityRequirement requirement_from_busy_fractions(const std::map<std::string, double>& q,
                                                       double theta);

/// Coverage where (i, u) counts only when at least b_u placed teams of type
/// u reach i. With every b_u = 1 this is evaluate_deployment.
CoverageReport evaluate_b_coverage(const Instance& instance, const CoverMatrix& cover,
                                   const Deployment& deployment,
                                   const ReliabilityRequirement& requirement);

/// Maximizes b-covered calls under the same resource constraints.
SolveResult solve_b_coverage(const Instance& instance, const CoverMatrix& cover,
                             const ReliabilityRequirement& requirement,
                             const SolveOptions& options = {});

/// One row of the busy-fraction report.
struct BusyFractionRow {
  std::string period;  // YYYY-MM
  std::string team_type;
  double mean_service_hours = 0.0;
  double daily_calls = 0.0;
  int fleet = 0;
  double q = 0.0;
  std::map<double, std::optional<int>> b;  // theta -> b, empty when q >= 1
};

inline constexpr double kReportThetas[] = {0.85, 0.90, 0.95};

/// Writes period,team_type,mean_service_hours,daily_calls,fleet,q,b_085,b_090,b_095.
void write_busy_fraction_csv(const std::vector<BusyFractionRow>& rows,
                             const std::filesystem::path& path);
void write_busy_fraction_csv(const std::vector<BusyFractionRow>& rows, std::ostream& out);

}  // namespace fleetic
