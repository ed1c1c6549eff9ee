#include "fleetic/synthetic.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "fleetic/error.hpp"
#include "random.hpp"

namespace fleetic {

namespace {

std::string numbered(const char* prefix, int k) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%04d", prefix, k);
  return buf;
}

// Share of daily calls per 4-hour band, night to evening.
constexpr double kBandProfile[] = {0.08, 0.10, 0.19, 0.22, 0.23, 0.18};

std::vector<double> neighborhood_weights(const SyntheticOptions& options) {
  detail::Random rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<double> w(static_cast<std::size_t>(options.demands));
  for (auto& x : w) x = std::exp(0.8 * rng.normal());
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= sum;
  return w;
}

}  // namespace

RateTable synthetic_rate_table(const SyntheticOptions& options) {
  if (options.demands < 1 || options.horizon_days < 1) {
    throw ValidationError("synthetic instance needs demands and a horizon");
  }
  RateTable table;
  table.band_count = 6;
  const auto weights = neighborhood_weights(options);
  const double daily = options.expected_calls / options.horizon_days;
  for (const auto& t : options.team_types) {
    table.service_mean_minutes[t.type.id] = t.service_mean_minutes;
    for (int n = 0; n < options.demands; ++n) {
      const double cell_daily = daily * t.call_share * weights[static_cast<std::size_t>(n)];
      for (int wd = 0; wd < 7; ++wd) {
        for (int band = 0; band < 6; ++band) {
          table.rates[RateKey{wd, band, t.type.id, numbered("n", n)}] =
              cell_daily * kBandProfile[band];
        }
      }
    }
  }
  return table;
}

Instance make_synthetic_instance(const SyntheticOptions& options) {
  detail::Random rng(options.seed);
  InstanceDescription raw;
  for (const auto& t : options.team_types) raw.team_types.push_back(t.type);

  for (int n = 0; n < options.demands; ++n) {
    DemandNode node;
    node.id = numbered("n", n);
    node.coordinates = LatLon{rng.uniform(options.lat_min, options.lat_max),
                              rng.uniform(options.lon_min, options.lon_max)};
    raw.demands.push_back(std::move(node));
  }
  for (int s = 0; s < options.sites; ++s) {
    CandidateSite site;
    site.id = numbered("s", s);
    site.coordinates = LatLon{rng.uniform(options.lat_min, options.lat_max),
                              rng.uniform(options.lon_min, options.lon_max)};
    site.capacity = options.site_capacity;
    raw.sites.push_back(std::move(site));
  }

  GenerateOptions gen;
  gen.days = options.horizon_days;
  gen.seed = options.seed + 1;
  const auto calls = generate_calls(synthetic_rate_table(options), gen);
  for (auto& node : raw.demands) {
    if (auto it = calls.demand.find(node.id); it != calls.demand.end()) {
      node.demand_per_type = it->second;
    }
  }

  raw.max_bases = options.max_bases;
  raw.travel_min = estimate_travel_minutes(raw.sites, raw.demands, options.travel);
  return validate_instance(std::move(raw));
}

}  // namespace fleetic
