#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <vector>

#include "fleetic/error.hpp"
#include "fleetic/solver.hpp"

namespace fleetic {

// Independent of the search state and the cover matrix: coverage is
// recomputed from the raw travel times for every enumerated assignment.
SolveResult brute_force_oracle(const Instance& instance, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n_sites = instance.num_sites();
  const std::size_t n_types = instance.num_types();
  const std::size_t n_demands = instance.num_demands();

  int fleet_total = 0;
  for (const auto& t : instance.team_types()) fleet_total += t.fleet_size;
  if (n_sites > 8 || fleet_total > 6) {
    throw GuardError("brute-force oracle limited to 8 sites and 6 teams");
  }

  std::vector<int> required(n_types, 1);
  for (const auto& [type, b] : options.required_teams) {
    auto u = instance.type_index(type);
    if (!u || b < 1) throw ValidationError("invalid coverage requirement for '" + type + "'");
    required[*u] = b;
  }

  std::uint32_t allowed = (1U << n_sites) - 1;
  std::uint32_t forced = 0;
  if (options.fixed_bases) {
    allowed = 0;
    for (const auto& id : *options.fixed_bases) {
      auto j = instance.site_index(id);
      if (!j) throw ValidationError("unknown fixed base '" + id + "'");
      allowed |= 1U << *j;
    }
    forced = allowed;
  }
  std::vector<std::uint32_t> locked(n_types, 0);
  for (const auto& pl : options.fixed_placements) {
    auto j = instance.site_index(pl.site);
    auto u = instance.type_index(pl.type);
    if (!j || !u) throw ValidationError("unknown fixed placement");
    locked[*u] |= 1U << *j;
  }

  const std::int64_t total = total_demand(instance);
  const int q_max = instance.max_bases();
  auto score = [&](std::int64_t covered, int open) {
    if (!options.lambda) return static_cast<double>(covered);
    const double f1 = total > 0 ? static_cast<double>(covered) / static_cast<double>(total) : 0.0;
    const double f2 = q_max > 0 ? static_cast<double>(q_max - open) / q_max : 1.0;
    return *options.lambda * f1 + (1.0 - *options.lambda) * f2;
  };

  // Candidate site sets per type.
  std::vector<std::vector<std::uint32_t>> choices(n_types);
  for (std::size_t u = 0; u < n_types; ++u) {
    const int fleet = instance.team_types()[u].fleet_size;
    for (std::uint32_t mask = 0; mask < (1U << n_sites); ++mask) {
      if ((mask & ~allowed) || (mask & locked[u]) != locked[u]) continue;
      if (std::popcount(mask) > fleet) continue;
      choices[u].push_back(mask);
    }
  }

  std::vector<std::uint32_t> pick(n_types, 0);
  std::vector<std::uint32_t> best_pick;
  double best = -std::numeric_limits<double>::infinity();
  std::uint64_t evaluated = 0;

  auto evaluate = [&]() {
    std::uint32_t open = forced;
    for (std::size_t j = 0; j < n_sites; ++j) {
      int load = 0;
      for (std::size_t u = 0; u < n_types; ++u) load += (pick[u] >> j) & 1U;
      if (load > instance.sites()[j].capacity) return;
      if (load > 0) open |= 1U << j;
    }
    const int open_count = std::popcount(open);
    if (open_count > q_max) return;
    ++evaluated;
    std::int64_t covered = 0;
    for (std::size_t u = 0; u < n_types; ++u) {
      const double limit = instance.team_types()[u].response_limit_min;
      for (std::size_t i = 0; i < n_demands; ++i) {
        int reach = 0;
        for (std::size_t j = 0; j < n_sites; ++j) {
          if (((pick[u] >> j) & 1U) && instance.travel(j, i) <= limit) ++reach;
        }
        if (reach >= required[u]) covered += instance.demand(i, u);
      }
    }
    const double s = score(covered, open_count);
    if (s > best) {
      best = s;
      best_pick = pick;
    }
  };

  auto recurse = [&](auto&& self, std::size_t u) -> void {
    if (u == n_types) {
      evaluate();
      return;
    }
    for (auto mask : choices[u]) {
      pick[u] = mask;
      self(self, u + 1);
    }
  };
  recurse(recurse, 0);

  if (best_pick.empty()) throw GuardError("no feasible assignment satisfies the fixed elements");

  Deployment deployment;
  for (std::size_t j = 0; j < n_sites; ++j) {
    bool used = (forced >> j) & 1U;
    for (std::size_t u = 0; u < n_types; ++u) {
      if ((best_pick[u] >> j) & 1U) {
        deployment.placements.insert({instance.sites()[j].id, instance.team_types()[u].id});
        used = true;
      }
    }
    if (used) deployment.open_bases.insert(instance.sites()[j].id);
  }

  SolveResult result;
  result.deployment = std::move(deployment);
  result.report =
      evaluate_deployment(instance, build_cover_matrix(instance), result.deployment, required);
  result.proof = ProofStatus::optimal;
  result.explored_nodes = evaluated;
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.objective = best;
  return result;
}

}  // namespace fleetic
