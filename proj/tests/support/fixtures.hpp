#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fleetic/coverage.hpp"
#include "fleetic/instance.hpp"

namespace fleetic::testing {

/// Three demands, two sites, types A (S = 10) and B (S = 8), one team each.
/// d(j1, .) = (5, 9, 12), d(j2, .) = (11, 7, 6); q(i1) = (4, 2),
/// q(i2) = (1, 3), q(i3) = (2, 5).
inline InstanceDescription tiny1_description(int max_bases = 2) {
  InstanceDescription raw;
  raw.team_types = {{"A", 10.0, 1}, {"B", 8.0, 1}};
  raw.demands = {
      {"i1", LatLon{-19.90, -43.95}, {{"A", 4}, {"B", 2}}},
      {"i2", LatLon{-19.91, -43.94}, {{"A", 1}, {"B", 3}}},
      {"i3", LatLon{-19.92, -43.93}, {{"A", 2}, {"B", 5}}},
  };
  raw.sites = {{"j1", LatLon{-19.89, -43.96}, 2}, {"j2", LatLon{-19.93, -43.92}, 2}};
  raw.max_bases = max_bases;
  raw.travel_min = {{5, 9, 12}, {11, 7, 6}};
  return raw;
}

inline Instance tiny1(int max_bases = 2) { return validate_instance(tiny1_description(max_bases)); }

inline Deployment make_deployment(std::vector<Placement> placements) {
  Deployment d;
  for (auto& p : placements) {
    d.open_bases.insert(p.site);
    d.placements.insert(std::move(p));
  }
  return d;
}

struct RandomInstanceLimits {
  int max_demands = 8;
  int max_sites = 6;
  int types = 2;
  int min_fleet = 0;
  int max_fleet = 2;
  int min_bases = 0;
  int max_demand = 9;
};

/// Small random instance for oracle and property checks.
inline InstanceDescription random_description(std::mt19937_64& rng,
                                              const RandomInstanceLimits& lim = {}) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  InstanceDescription raw;
  for (int u = 0; u < lim.types; ++u) {
    raw.team_types.push_back(
        {std::string(1, static_cast<char>('A' + u)), static_cast<double>(pick(4, 14)),
         pick(lim.min_fleet, lim.max_fleet)});
  }
  const int n_demands = pick(1, lim.max_demands);
  const int n_sites = pick(1, lim.max_sites);
  for (int i = 0; i < n_demands; ++i) {
    DemandNode node{"d" + std::to_string(i), std::nullopt, {}};
    for (const auto& t : raw.team_types) node.demand_per_type[t.id] = pick(0, lim.max_demand);
    raw.demands.push_back(std::move(node));
  }
  for (int j = 0; j < n_sites; ++j) {
    raw.sites.push_back({"s" + std::to_string(j), std::nullopt, pick(1, lim.types)});
  }
  raw.max_bases = pick(std::min(lim.min_bases, n_sites), n_sites);
  raw.travel_min.assign(n_sites, std::vector<double>(n_demands));
  for (auto& row : raw.travel_min) {
    for (auto& d : row) d = pick(0, 20);
  }
  return raw;
}

/// Covered calls by a direct triple loop over sites, demands and types on
/// the raw travel times; shares nothing with the bit-matrix path.
inline std::int64_t reference_covered(const Instance& inst, const Deployment& dep,
                                      const std::vector<int>& required = {}) {
  std::int64_t covered = 0;
  for (std::size_t i = 0; i < inst.num_demands(); ++i) {
    for (std::size_t u = 0; u < inst.num_types(); ++u) {
      int reach = 0;
      for (std::size_t j = 0; j < inst.num_sites(); ++j) {
        const bool placed =
            dep.placements.contains({inst.sites()[j].id, inst.team_types()[u].id});
        if (placed && inst.travel(j, i) <= inst.team_types()[u].response_limit_min) ++reach;
      }
      const int b = required.empty() ? 1 : required[u];
      if (reach >= b) covered += inst.demand(i, u);
    }
  }
  return covered;
}

/// Random feasible deployment built by trying placements in random order.
inline Deployment random_deployment(const Instance& inst, std::mt19937_64& rng) {
  std::vector<Placement> slots;
  for (const auto& s : inst.sites()) {
    for (const auto& t : inst.team_types()) slots.push_back({s.id, t.id});
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  Deployment d;
  for (const auto& p : slots) {
    if (std::bernoulli_distribution(0.5)(rng)) continue;
    Deployment trial = d;
    trial.open_bases.insert(p.site);
    trial.placements.insert(p);
    if (deployment_violations(inst, trial).empty()) d = std::move(trial);
  }
  return d;
}

}  // namespace fleetic::testing
