#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "fleetic/coverage.hpp"
#include "fleetic/solver.hpp"

namespace fleetic {

struct ParetoPoint {
  double lambda = 0.0;
  double f1_tx_cob = 0.0;
  double f2_tx_red_bases = 0.0;
  double scalar_score = 0.0;  // lambda * f1 + (1 - lambda) * f2
  Deployment deployment;
  std::int64_t covered_calls = 0;
  int bases_open = 0;
  ProofStatus proof = ProofStatus::heuristic;
};

/// lambda * TxCob + (1 - lambda) * TxRedBases. Throws ValidationError when
/// lambda is outside [0, 1] or the report has no demand to normalize by.
double scalarized_objective(const CoverageReport& report, double lambda);

struct SweepOptions {
  int grid_size = 101;
  /// Worker threads; 0 uses the available hardware parallelism.
  unsigned jobs = 0;
  /// Solver settings for each lambda. The mode is used as given, except
  /// that exact falls back to greedy+local-search when the site count
  /// exceeds exact_site_limit.
  SolveOptions solve;
};

/// Solves the weighted-sum problem on a uniform lambda grid over [0, 1],
/// one point per grid value, ordered by lambda.
std::vector<ParetoPoint> sweep_lambda(const Instance& instance, const CoverMatrix& cover,
                                      const SweepOptions& options = {});

/// Non-dominated subset on (f1, f2), one point per distinct pair (lowest
/// lambda kept), sorted by ascending f1.
std::vector<ParetoPoint> pareto_filter(const std::vector<ParetoPoint>& points);

/// True when a is no worse than b in both objectives and better in one.
bool dominates(const ParetoPoint& a, const ParetoPoint& b);

/// Writes lambda,tx_cob,tx_red_bases,bases_open,covered_calls.
void write_pareto_csv(const std::vector<ParetoPoint>& points, const std::filesystem::path& path);
void write_pareto_csv(const std::vector<ParetoPoint>& points, std::ostream& out);

}  // namespace fleetic
