#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "fleetic/error.hpp"
#include "fleetic/instance.hpp"

namespace fleetic {
namespace {

using testing::tiny1;
using testing::tiny1_description;

TEST(ValidateInstance, Tiny1IsValid) {
  const Instance inst = tiny1();
  EXPECT_EQ(inst.num_demands(), 3u);
  EXPECT_EQ(inst.num_sites(), 2u);
  EXPECT_EQ(inst.num_types(), 2u);
  EXPECT_EQ(inst.travel(1, 2), 6.0);
  EXPECT_EQ(inst.demand(2, 1), 5);
  EXPECT_EQ(*inst.site_index("j2"), 1u);
}

TEST(ValidateInstance, DensifiesDemandMaps) {
  auto raw = tiny1_description();
  raw.demands[0].demand_per_type.erase("B");
  const Instance inst = validate_instance(raw);
  EXPECT_EQ(inst.demands()[0].demand_per_type.at("B"), 0);
  EXPECT_EQ(inst.demand(0, 1), 0);
}

TEST(ValidateInstance, RejectsShortTravelRow) {
  auto raw = tiny1_description();
  for (auto& row : raw.travel_min) row.pop_back();
  try {
    validate_instance(raw);
    FAIL() << "expected a dimension error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("j1"), std::string::npos);
  }
}

TEST(ValidateInstance, RejectsMissingTravelRow) {
  auto raw = tiny1_description();
  raw.travel_min.pop_back();
  EXPECT_THROW(validate_instance(raw), ValidationError);
}

TEST(ValidateInstance, RejectsCapacityAboveTypeCount) {
  auto raw = tiny1_description();
  raw.sites[1].capacity = 3;
  try {
    validate_instance(raw);
    FAIL() << "expected a capacity error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("j2"), std::string::npos);
  }
}

TEST(ValidateInstance, RejectsBadEntities) {
  {
    auto raw = tiny1_description();
    raw.demands[1].demand_per_type["C"] = 1;
    EXPECT_THROW(validate_instance(raw), ValidationError);
  }
  {
    auto raw = tiny1_description();
    raw.demands[1].demand_per_type["A"] = -1;
    EXPECT_THROW(validate_instance(raw), ValidationError);
  }
  {
    auto raw = tiny1_description();
    raw.travel_min[0][1] = -0.5;
    EXPECT_THROW(validate_instance(raw), ValidationError);
  }
  {
    auto raw = tiny1_description();
    raw.max_bases = 3;
    EXPECT_THROW(validate_instance(raw), ValidationError);
  }
  {
    auto raw = tiny1_description();
    raw.team_types[1].id = "A";
    EXPECT_THROW(validate_instance(raw), ValidationError);
  }
  {
    auto raw = tiny1_description();
    raw.team_types[0].response_limit_min = -1.0;
    EXPECT_THROW(validate_instance(raw), ValidationError);
  }
}

TEST(ValidateInstance, IsIdempotent) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const Instance once = validate_instance(testing::random_description(rng));
    const Instance twice = validate_instance(once.description());
    EXPECT_EQ(once, twice);
  }
}

TEST(TotalDemand, Values) {
  EXPECT_EQ(total_demand(tiny1()), 17);

  auto raw = tiny1_description();
  for (auto& d : raw.demands) {
    for (auto& [type, q] : d.demand_per_type) q = 0;
  }
  EXPECT_EQ(total_demand(validate_instance(raw)), 0);

  InstanceDescription single;
  single.team_types = {{"A", 5.0, 1}};
  single.demands = {{"i", std::nullopt, {{"A", 7}}}};
  single.sites = {{"j", std::nullopt, 1}};
  single.max_bases = 1;
  single.travel_min = {{1.0}};
  EXPECT_EQ(total_demand(validate_instance(single)), 7);
}

TEST(DeploymentCheck, AcceptsFeasibleDeployment) {
  const Instance inst = tiny1(2);
  EXPECT_TRUE(deployment_violations(inst, testing::make_deployment({{"j1", "A"}, {"j2", "B"}}))
                  .empty());
  EXPECT_TRUE(deployment_violations(inst, Deployment{}).empty());
}

TEST(DeploymentCheck, RejectsEachConstraint) {
  const Instance inst = tiny1(1);
  // Team at a closed site.
  Deployment closed;
  closed.placements.insert({"j1", "A"});
  EXPECT_FALSE(deployment_violations(inst, closed).empty());
  // More bases than Q.
  Deployment too_many;
  too_many.open_bases = {"j1", "j2"};
  EXPECT_FALSE(deployment_violations(inst, too_many).empty());
  // Fleet exceeded.
  const Instance q2 = tiny1(2);
  EXPECT_FALSE(
      deployment_violations(q2, testing::make_deployment({{"j1", "A"}, {"j2", "A"}})).empty());
  // Capacity exceeded.
  auto raw = tiny1_description(2);
  raw.sites[0].capacity = 1;
  EXPECT_FALSE(deployment_violations(validate_instance(raw),
                                     testing::make_deployment({{"j1", "A"}, {"j1", "B"}}))
                   .empty());
  EXPECT_THROW(check_deployment(inst, closed), ValidationError);
}

// Flipping a single base or placement flips acceptance exactly when the
// flip breaks (or repairs) one of the resource constraints.
TEST(DeploymentCheck, SingleFlipMutationsMatchConstraintRecheck) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = validate_instance(testing::random_description(rng));
    const Deployment base = testing::random_deployment(inst, rng);
    ASSERT_TRUE(deployment_violations(inst, base).empty());

    auto expected_ok = [&](const Deployment& d) {
      std::map<std::string, int> per_site, per_type;
      for (const auto& p : d.placements) {
        if (!d.open_bases.contains(p.site)) return false;
        ++per_site[p.site];
        ++per_type[p.type];
      }
      for (const auto& [s, n] : per_site) {
        if (n > inst.sites()[*inst.site_index(s)].capacity) return false;
      }
      for (const auto& [t, n] : per_type) {
        if (n > inst.team_types()[*inst.type_index(t)].fleet_size) return false;
      }
      return d.open_bases.size() <= static_cast<std::size_t>(inst.max_bases());
    };

    for (const auto& site : inst.sites()) {
      Deployment d = base;
      if (!d.open_bases.erase(site.id)) d.open_bases.insert(site.id);
      EXPECT_EQ(deployment_violations(inst, d).empty(), expected_ok(d));
      for (const auto& type : inst.team_types()) {
        Deployment e = base;
        const Placement p{site.id, type.id};
        if (!e.placements.erase(p)) e.placements.insert(p);
        EXPECT_EQ(deployment_violations(inst, e).empty(), expected_ok(e));
      }
    }
  }
}

TEST(TravelEstimate, UsesCoordinates) {
  const auto raw = tiny1_description();
  const auto t = estimate_travel_minutes(raw.sites, raw.demands, {30.0, 1.0});
  ASSERT_EQ(t.size(), 2u);
  ASSERT_EQ(t[0].size(), 3u);
  // 1 km at 30 km/h is 2 minutes.
  const double km = haversine_km(*raw.sites[0].coordinates, *raw.demands[0].coordinates);
  EXPECT_NEAR(t[0][0], km * 2.0, 1e-9);
  EXPECT_NEAR(haversine_km({0, 0}, {0, 1}), 111.195, 0.01);

  auto missing = raw;
  missing.demands[2].coordinates.reset();
  EXPECT_THROW(estimate_travel_minutes(missing.sites, missing.demands), ValidationError);
}

}  // namespace
}  // namespace fleetic
