#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "fleetic/coverage.hpp"
#include "fleetic/instance.hpp"

namespace fleetic {

enum class SolveMode { exact, greedy, greedy_local_search };
enum class ProofStatus { optimal, heuristic, time_limit };

std::string to_string(SolveMode mode);
std::string to_string(ProofStatus proof);
SolveMode parse_solve_mode(const std::string& text);
ProofStatus parse_proof_status(const std::string& text);

struct SolveOptions {
  SolveMode mode = SolveMode::exact;
  int exact_site_limit = 25;
  /// Base set frozen to exactly these sites; teams may only go there.
  std::optional<std::set<std::string>> fixed_bases;
  /// Placements that must stay where they are.
  std::set<Placement> fixed_placements;
  std::optional<double> time_limit_s;

  /// Weighted-sum objective lambda * TxCob + (1 - lambda) * TxRedBases when
  /// set; plain covered-call maximization otherwise.
  std::optional<double> lambda;
  /// Teams of a type needed within range for a call to count (b_u). Types
  /// not listed need one.
  std::map<std::string, int> required_teams;
};

struct SolveResult {
  Deployment deployment;
  CoverageReport report;
  ProofStatus proof = ProofStatus::heuristic;
  std::uint64_t explored_nodes = 0;
  double wall_time_s = 0.0;
  /// Objective value reached: covered calls, or the weighted-sum score.
  double objective = 0.0;
};

/// Depth-first implicit enumeration with an admissible coverage bound.
/// Throws GuardError when the searched site set exceeds exact_site_limit.
SolveResult solve_exact(const Instance& instance, const CoverMatrix& cover,
                        const SolveOptions& options = {});

/// Repeatedly adds the placement with the largest positive marginal gain.
SolveResult solve_greedy(const Instance& instance, const CoverMatrix& cover,
                         const SolveOptions& options = {});

/// Best-improvement hill climbing over single-team relocations and base
/// swaps. The objective never decreases. Throws ValidationError when the
/// input is infeasible or misses a fixed placement.
Deployment improve_local_search(const Instance& instance, const CoverMatrix& cover,
                                const Deployment& deployment, const SolveOptions& options = {});

/// Exhaustive enumeration of every feasible assignment, evaluated straight
/// from the travel matrix. Limited to 8 sites and 6 teams in total.
SolveResult brute_force_oracle(const Instance& instance, const SolveOptions& options = {});

/// Dispatches on options.mode; greedy_local_search runs solve_greedy then
/// improve_local_search.
SolveResult solve(const Instance& instance, const CoverMatrix& cover,
                  const SolveOptions& options = {});

}  // namespace fleetic
