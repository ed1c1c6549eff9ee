#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace fleetic {

struct LatLon {
  double lat = 0.0;
  double lon = 0.0;

  bool operator==(const LatLon&) const = default;
};

struct TeamType {
  std::string id;
  double response_limit_min = 0.0;  // S^u
  int fleet_size = 0;               // P^u

  bool operator==(const TeamType&) const = default;
};

struct DemandNode {
  std::string id;
  std::optional<LatLon> coordinates;
  std::map<std::string, std::int64_t> demand_per_type;  // calls per team type

  bool operator==(const DemandNode&) const = default;
};

struct CandidateSite {
  std::string id;
  std::optional<LatLon> coordinates;
  int capacity = 1;  // C_j, at most one team per type

  bool operator==(const CandidateSite&) const = default;
};

/// Unvalidated instance content, as parsed from a file or assembled in code.
/// travel_min is row-major with one row per site and one column per demand.
struct InstanceDescription {
  std::vector<TeamType> team_types;
  std::vector<DemandNode> demands;
  std::vector<CandidateSite> sites;
  int max_bases = 0;  // Q
  std::vector<std::vector<double>> travel_min;

  bool operator==(const InstanceDescription&) const = default;
};

/// A validated, immutable problem instance.
///
/// The public surface is identifier based; the dense indices exposed here
/// follow input order and are what the solvers work on internally.
class Instance {
 public:
  const std::vector<TeamType>& team_types() const { return description_.team_types; }
  const std::vector<DemandNode>& demands() const { return description_.demands; }
  const std::vector<CandidateSite>& sites() const { return description_.sites; }
  int max_bases() const { return description_.max_bases; }

  std::size_t num_types() const { return description_.team_types.size(); }
  std::size_t num_demands() const { return description_.demands.size(); }
  std::size_t num_sites() const { return description_.sites.size(); }

  double travel(std::size_t site, std::size_t demand) const {
    return travel_[site * num_demands() + demand];
  }
  std::int64_t demand(std::size_t node, std::size_t type) const {
    return demand_[node * num_types() + type];
  }

  std::optional<std::size_t> type_index(const std::string& id) const;
  std::optional<std::size_t> demand_index(const std::string& id) const;
  std::optional<std::size_t> site_index(const std::string& id) const;

  /// The densified description this instance was built from.
  const InstanceDescription& description() const { return description_; }

  bool operator==(const Instance& other) const { return description_ == other.description_; }

 private:
  friend Instance validate_instance(InstanceDescription raw);

  InstanceDescription description_;
  std::vector<double> travel_;
  std::vector<std::int64_t> demand_;
  std::unordered_map<std::string, std::size_t> type_index_;
  std::unordered_map<std::string, std::size_t> demand_index_;
  std::unordered_map<std::string, std::size_t> site_index_;
};

/// Checks every instance invariant and densifies demand maps with explicit
/// zeros. Throws ValidationError naming the offending entity.
Instance validate_instance(InstanceDescription raw);

/// Sum of q_iu over all demand nodes and team types.
std::int64_t total_demand(const Instance& instance);

struct Placement {
  std::string site;
  std::string type;

  auto operator<=>(const Placement&) const = default;
  bool operator==(const Placement&) const = default;
};

/// Open bases (z_j = 1) and team placements (x_j^u = 1).
struct Deployment {
  std::set<std::string> open_bases;
  std::set<Placement> placements;

  bool operator==(const Deployment&) const = default;
};

/// Human-readable list of violated deployment constraints; empty when the
/// deployment is feasible for the instance.
std::vector<std::string> deployment_violations(const Instance& instance,
                                               const Deployment& deployment);

/// Throws ValidationError listing the first violation, if any.
void check_deployment(const Instance& instance, const Deployment& deployment);

/// Closes open bases that host no team.
Deployment prune_empty_bases(const Deployment& deployment);

struct TravelModel {
  double speed_kmh = 30.0;
  double detour_factor = 1.3;  // road distance over great-circle distance
};

double haversine_km(const LatLon& a, const LatLon& b);

/// Travel-time matrix (sites x demands, minutes) estimated from coordinates.
/// Throws ValidationError when an entity has no coordinates.
std::vector<std::vector<double>> estimate_travel_minutes(const std::vector<CandidateSite>& sites,
                                                         const std::vector<DemandNode>& demands,
                                                         const TravelModel& model = {});

}  // namespace fleetic
