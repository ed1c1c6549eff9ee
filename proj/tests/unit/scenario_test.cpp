#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "fleetic/error.hpp"
#include "fleetic/scenario.hpp"

namespace fleetic {
namespace {

using testing::make_deployment;
using testing::tiny1;

ScenarioConfig with_baseline(int scenario) {
  ScenarioConfig c;
  c.scenario = scenario;
  c.baseline = make_deployment({{"j1", "A"}, {"j1", "B"}});
  return c;
}

TEST(Scenario, Tiny1Values) {
  const Instance inst = tiny1();

  const auto s1 = run_scenario(inst, with_baseline(1));
  EXPECT_EQ(s1.report.covered_demand, 7);
  EXPECT_EQ(s1.report.total_demand, 17);
  EXPECT_FALSE(s1.proof);
  EXPECT_EQ(s1.delta_calls(), 0);

  const auto s2 = run_scenario(inst, with_baseline(2));
  EXPECT_EQ(s2.report.covered_demand, 7);
  EXPECT_EQ(s2.deployment.open_bases, std::set<std::string>{"j1"});

  ScenarioConfig c3;
  c3.scenario = 3;
  const auto s3 = run_scenario(inst, c3);
  EXPECT_EQ(s3.report.covered_demand, 13);
  EXPECT_EQ(s3.proof, ProofStatus::optimal);
  EXPECT_FALSE(s3.delta_calls());

  auto c5 = with_baseline(5);
  c5.extra_teams = {{"B", 1}};
  const auto s5 = run_scenario(inst, c5);
  EXPECT_EQ(s5.report.covered_demand, 15);
  EXPECT_EQ(s5.fleet.at("B"), 2);
  EXPECT_EQ(s5.delta_calls(), 8);
  for (const auto& p : c5.baseline->placements) EXPECT_TRUE(s5.deployment.placements.contains(p));

  auto c6 = c5;
  c6.scenario = 6;
  c6.baseline.reset();
  const auto s6 = run_scenario(inst, c6);
  EXPECT_GE(s6.report.covered_demand, s5.report.covered_demand);
}

TEST(Scenario, ReliabilityScenario) {
  auto raw = testing::tiny1_description();
  raw.team_types[1].fleet_size = 2;
  const Instance inst = validate_instance(raw);
  ScenarioConfig c;
  c.scenario = 4;
  c.required_teams = {{"B", 2}};
  const auto s4 = run_scenario(inst, c);
  EXPECT_EQ(s4.report.covered_demand, 5);
  EXPECT_EQ(s4.required_teams.at("B"), 2);

  ScenarioConfig from_q;
  from_q.scenario = 4;
  from_q.theta = 0.9;
  from_q.busy_fractions = {{"A", 0.05}, {"B", 0.5}};
  const auto r = run_scenario(inst, from_q);
  EXPECT_EQ(r.required_teams.at("A"), 1);
  EXPECT_EQ(r.required_teams.at("B"), 4);
}

TEST(Scenario, OrderingOnRandomInstances) {
  std::mt19937_64 rng(66);
  for (int k = 0; k < 40; ++k) {
    const Instance inst = validate_instance(testing::random_description(rng));
    const Deployment baseline = testing::random_deployment(inst, rng);
    auto run = [&](int s, std::map<std::string, int> extra = {}) {
      ScenarioConfig c;
      c.scenario = s;
      if (s == 1 || s == 2 || s == 5) c.baseline = baseline;
      c.extra_teams = std::move(extra);
      return run_scenario(inst, c).report.covered_demand;
    };
    const auto v1 = run(1);
    const auto v2 = run(2);
    const auto v3 = run(3);
    EXPECT_LE(v1, v2);
    EXPECT_LE(v2, v3);
    const std::map<std::string, int> extra = {{"A", 1}, {"B", 1}};
    const auto v5 = run(5, extra);
    const auto v6 = run(6, extra);
    EXPECT_LE(v1, v5);
    EXPECT_LE(v5, v6);
    EXPECT_LE(v3, v6);
  }
}

TEST(Scenario, ConfigErrors) {
  const Instance inst = tiny1();
  ScenarioConfig c;
  c.scenario = 7;
  EXPECT_THROW(validate_scenario(inst, c), ValidationError);
  c.scenario = 1;
  EXPECT_THROW(run_scenario(inst, c), ValidationError);
  auto c5 = with_baseline(5);
  EXPECT_THROW(validate_scenario(inst, c5), ValidationError);
  c5.extra_teams = {{"B", 4}};
  EXPECT_THROW(validate_scenario(inst, c5), ValidationError);
  c5.extra_teams = {{"Z", 1}};
  EXPECT_THROW(validate_scenario(inst, c5), ValidationError);
  ScenarioConfig c4;
  c4.scenario = 4;
  EXPECT_THROW(validate_scenario(inst, c4), ValidationError);
  c4.theta = 0.9;
  c4.busy_fractions = {{"A", 0.3}};
  EXPECT_THROW(validate_scenario(inst, c4), ValidationError);
  auto bad_baseline = with_baseline(2);
  bad_baseline.baseline = make_deployment({{"j1", "A"}, {"j2", "A"}});
  EXPECT_THROW(validate_scenario(inst, bad_baseline), ValidationError);
}

}  // namespace
}  // namespace fleetic
