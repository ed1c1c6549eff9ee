#include "fleetic/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fleetic/error.hpp"

namespace fleetic {

namespace {

template <typename T>
std::unordered_map<std::string, std::size_t> index_ids(const std::vector<T>& items,
                                                       const char* kind) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (items[k].id.empty()) {
      throw ValidationError(std::string(kind) + " #" + std::to_string(k) + " has an empty id");
    }
    if (!index.emplace(items[k].id, k).second) {
      throw ValidationError(std::string("duplicate ") + kind + " id '" + items[k].id + "'");
    }
  }
  return index;
}

void check_coordinates(const std::optional<LatLon>& c, const std::string& what) {
  if (!c) return;
  if (!std::isfinite(c->lat) || !std::isfinite(c->lon) || std::abs(c->lat) > 90.0 ||
      std::abs(c->lon) > 180.0) {
    throw ValidationError(what + " has coordinates outside WGS84 range");
  }
}

}  // namespace

std::optional<std::size_t> Instance::type_index(const std::string& id) const {
  auto it = type_index_.find(id);
  if (it == type_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Instance::demand_index(const std::string& id) const {
  auto it = demand_index_.find(id);
  if (it == demand_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Instance::site_index(const std::string& id) const {
  auto it = site_index_.find(id);
  if (it == site_index_.end()) return std::nullopt;
  return it->second;
}

Instance validate_instance(InstanceDescription raw) {
  Instance out;
  out.type_index_ = index_ids(raw.team_types, "team type");
  out.demand_index_ = index_ids(raw.demands, "demand node");
  out.site_index_ = index_ids(raw.sites, "site");

  for (const auto& t : raw.team_types) {
    // A zero limit is admitted: such a type only covers co-located demand.
    if (!std::isfinite(t.response_limit_min) || t.response_limit_min < 0.0) {
      throw ValidationError("team type '" + t.id + "' has invalid response_limit_min");
    }
    if (t.fleet_size < 0) {
      throw ValidationError("team type '" + t.id + "' has negative fleet_size");
    }
  }

  const std::size_t n_types = raw.team_types.size();
  for (auto& node : raw.demands) {
    check_coordinates(node.coordinates, "demand node '" + node.id + "'");
    for (const auto& [type, calls] : node.demand_per_type) {
      if (!out.type_index_.contains(type)) {
        throw ValidationError("demand node '" + node.id + "' references unknown team type '" +
                              type + "'");
      }
      if (calls < 0) {
        throw ValidationError("demand node '" + node.id + "' has negative demand for type '" +
                              type + "'");
      }
    }
    for (const auto& t : raw.team_types) node.demand_per_type.try_emplace(t.id, 0);
  }

  for (const auto& site : raw.sites) {
    check_coordinates(site.coordinates, "site '" + site.id + "'");
    if (site.capacity < 1 || static_cast<std::size_t>(site.capacity) > n_types) {
      throw ValidationError("site '" + site.id + "' has capacity " +
                            std::to_string(site.capacity) + " outside [1, " +
                            std::to_string(n_types) + "]");
    }
  }

  if (raw.max_bases < 0 || static_cast<std::size_t>(raw.max_bases) > raw.sites.size()) {
    throw ValidationError("max_bases " + std::to_string(raw.max_bases) + " outside [0, " +
                          std::to_string(raw.sites.size()) + "]");
  }

  if (raw.travel_min.size() != raw.sites.size()) {
    throw ValidationError("travel_min has " + std::to_string(raw.travel_min.size()) +
                          " rows, expected one per site (" + std::to_string(raw.sites.size()) +
                          ")");
  }
  const std::size_t n_demands = raw.demands.size();
  out.travel_.reserve(raw.sites.size() * n_demands);
  for (std::size_t j = 0; j < raw.sites.size(); ++j) {
    const auto& row = raw.travel_min[j];
    if (row.size() != n_demands) {
      throw ValidationError("travel_min row for site '" + raw.sites[j].id + "' has " +
                            std::to_string(row.size()) + " entries, expected " +
                            std::to_string(n_demands));
    }
    for (std::size_t i = 0; i < n_demands; ++i) {
      if (!std::isfinite(row[i]) || row[i] < 0.0) {
        throw ValidationError("travel time from site '" + raw.sites[j].id + "' to demand '" +
                              raw.demands[i].id + "' is negative or not finite");
      }
      out.travel_.push_back(row[i]);
    }
  }

  out.demand_.assign(n_demands * n_types, 0);
  for (std::size_t i = 0; i < n_demands; ++i) {
    for (std::size_t u = 0; u < n_types; ++u) {
      out.demand_[i * n_types + u] = raw.demands[i].demand_per_type.at(raw.team_types[u].id);
    }
  }

  out.description_ = std::move(raw);
  return out;
}

std::int64_t total_demand(const Instance& instance) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < instance.num_demands(); ++i) {
    for (std::size_t u = 0; u < instance.num_types(); ++u) total += instance.demand(i, u);
  }
  return total;
}

std::vector<std::string> deployment_violations(const Instance& instance,
                                               const Deployment& deployment) {
  std::vector<std::string> out;
  for (const auto& base : deployment.open_bases) {
    if (!instance.site_index(base)) out.push_back("unknown site '" + base + "'");
  }
  std::map<std::string, int> per_site;
  std::map<std::string, int> per_type;
  for (const auto& p : deployment.placements) {
    if (!instance.site_index(p.site)) {
      out.push_back("placement references unknown site '" + p.site + "'");
      continue;
    }
    if (!instance.type_index(p.type)) {
      out.push_back("placement references unknown team type '" + p.type + "'");
      continue;
    }
    if (!deployment.open_bases.contains(p.site)) {
      out.push_back("team '" + p.type + "' placed at site '" + p.site + "' without an open base");
    }
    ++per_site[p.site];
    ++per_type[p.type];
  }
  for (const auto& [site, count] : per_site) {
    const int cap = instance.sites()[*instance.site_index(site)].capacity;
    if (count > cap) {
      out.push_back("site '" + site + "' hosts " + std::to_string(count) +
                    " teams, capacity is " + std::to_string(cap));
    }
  }
  for (const auto& [type, count] : per_type) {
    const int fleet = instance.team_types()[*instance.type_index(type)].fleet_size;
    if (count > fleet) {
      out.push_back("team type '" + type + "' placed " + std::to_string(count) +
                    " times, fleet size is " + std::to_string(fleet));
    }
  }
  if (deployment.open_bases.size() > static_cast<std::size_t>(instance.max_bases())) {
    out.push_back(std::to_string(deployment.open_bases.size()) + " open bases exceed max_bases " +
                  std::to_string(instance.max_bases()));
  }
  return out;
}

void check_deployment(const Instance& instance, const Deployment& deployment) {
  auto violations = deployment_violations(instance, deployment);
  if (!violations.empty()) throw ValidationError("infeasible deployment: " + violations.front());
}

Deployment prune_empty_bases(const Deployment& deployment) {
  Deployment out;
  out.placements = deployment.placements;
  for (const auto& p : deployment.placements) out.open_bases.insert(p.site);
  return out;
}

double haversine_km(const LatLon& a, const LatLon& b) {
  constexpr double earth_radius_km = 6371.0088;
  constexpr double deg = std::numbers::pi / 180.0;
  const double dlat = (b.lat - a.lat) * deg;
  const double dlon = (b.lon - a.lon) * deg;
  const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(a.lat * deg) * std::cos(b.lat * deg) * std::sin(dlon / 2) *
                       std::sin(dlon / 2);
  return 2.0 * earth_radius_km * std::asin(std::min(1.0, std::sqrt(h)));
}

std::vector<std::vector<double>> estimate_travel_minutes(const std::vector<CandidateSite>& sites,
                                                         const std::vector<DemandNode>& demands,
                                                         const TravelModel& model) {
  if (!(model.speed_kmh > 0.0) || !(model.detour_factor > 0.0)) {
    throw ValidationError("travel model needs positive speed and detour factor");
  }
  for (const auto& s : sites) {
    if (!s.coordinates) throw ValidationError("site '" + s.id + "' has no coordinates");
  }
  for (const auto& d : demands) {
    if (!d.coordinates) throw ValidationError("demand node '" + d.id + "' has no coordinates");
  }
  std::vector<std::vector<double>> out(sites.size(), std::vector<double>(demands.size()));
  for (std::size_t j = 0; j < sites.size(); ++j) {
    for (std::size_t i = 0; i < demands.size(); ++i) {
      const double km = haversine_km(*sites[j].coordinates, *demands[i].coordinates);
      out[j][i] = km * model.detour_factor / model.speed_kmh * 60.0;
    }
  }
  return out;
}

}  // namespace fleetic
