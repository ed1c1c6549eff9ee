#include "fleetic/geojson.hpp"

#include <algorithm>
#include <numeric>

#include "fleetic/error.hpp"

namespace fleetic {

using nlohmann::json;

namespace {

json point(const LatLon& c) {
  return {{"type", "Point"}, {"coordinates", json::array({c.lon, c.lat})}};
}

}  // namespace

json export_geojson(const Instance& instance, const CoverMatrix& cover,
                    const Deployment& deployment) {
  const CoverageReport report = evaluate_deployment(instance, cover, deployment);

  std::vector<std::size_t> demands(instance.num_demands());
  std::iota(demands.begin(), demands.end(), 0);
  std::sort(demands.begin(), demands.end(), [&](std::size_t a, std::size_t b) {
    return instance.demands()[a].id < instance.demands()[b].id;
  });
  for (auto i : demands) {
    if (!instance.demands()[i].coordinates) {
      throw ValidationError("demand node '" + instance.demands()[i].id + "' has no coordinates");
    }
  }
  for (const auto& base : deployment.open_bases) {
    if (!instance.sites()[*instance.site_index(base)].coordinates) {
      throw ValidationError("site '" + base + "' has no coordinates");
    }
  }

  json features = json::array();
  for (auto i : demands) {
    const auto& node = instance.demands()[i];
    json covered = json::object();
    for (std::size_t u = 0; u < instance.num_types(); ++u) {
      covered[instance.team_types()[u].id] = static_cast<bool>(report.cover_flags[i][u]);
    }
    features.push_back({{"type", "Feature"},
                        {"geometry", point(*node.coordinates)},
                        {"properties",
                         {{"kind", "demand"},
                          {"id", node.id},
                          {"demand", node.demand_per_type},
                          {"covered", std::move(covered)}}}});
  }
  for (const auto& base : deployment.open_bases) {
    const auto& site = instance.sites()[*instance.site_index(base)];
    json teams = json::array();
    for (const auto& p : deployment.placements) {
      if (p.site == base) teams.push_back(p.type);
    }
    features.push_back({{"type", "Feature"},
                        {"geometry", point(*site.coordinates)},
                        {"properties", {{"kind", "base"}, {"id", base}, {"teams", std::move(teams)}}}});
  }
  return {{"type", "FeatureCollection"},
          {"features", std::move(features)},
          {"covered_calls", report.covered_demand},
          {"tx_cob", report.tx_cob}};
}

json export_geojson(const Instance& instance, const CoverMatrix& cover, const ParetoPoint& point) {
  json doc = export_geojson(instance, cover, point.deployment);
  doc["lambda"] = point.lambda;
  doc["tx_red_bases"] = point.f2_tx_red_bases;
  return doc;
}

}  // namespace fleetic
