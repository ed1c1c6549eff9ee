#pragma once

#include <cstdint>
#include <vector>

#include "fleetic/demand.hpp"
#include "fleetic/instance.hpp"

namespace fleetic {

struct SyntheticTeamType {
  TeamType type;
  double call_share = 0.5;  // fraction of all calls needing this type
  double service_mean_minutes = 60.0;
};

/// City-scale synthetic instance: neighborhoods and candidate sites at
/// random coordinates inside a bounding box, demand drawn by Poisson
/// sampling over a horizon, travel times from great-circle distance.
struct SyntheticOptions {
  int demands = 427;
  int sites = 1527;
  int max_bases = 22;
  int site_capacity = 2;
  int horizon_days = 30;
  double expected_calls = 26736.0;  // over the whole horizon
  std::uint64_t seed = 2017;
  double lat_min = -20.03;
  double lat_max = -19.78;
  double lon_min = -44.06;
  double lon_max = -43.86;
  TravelModel travel;
  std::vector<SyntheticTeamType> team_types = {
      {{"USA", 10.0, 6}, 0.44, 75.0},
      {{"USB", 8.0, 21}, 0.56, 60.0},
  };
};

/// Rate table whose expected call volume over the horizon is
/// options.expected_calls, split by neighborhood weight, type share and a
/// fixed time-of-day profile.
RateTable synthetic_rate_table(const SyntheticOptions& options);

/// Validated instance; deterministic in options.seed.
Instance make_synthetic_instance(const SyntheticOptions& options = {});

}  // namespace fleetic
