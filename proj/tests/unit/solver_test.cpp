#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "fleetic/error.hpp"
#include "fleetic/solver.hpp"

namespace fleetic {
namespace {

using testing::make_deployment;
using testing::tiny1;

SolveOptions with_mode(SolveMode mode) {
  SolveOptions o;
  o.mode = mode;
  return o;
}

TEST(SolveExact, Tiny1) {
  for (int q : {1, 2}) {
    const Instance inst = tiny1(q);
    const auto r = solve_exact(inst, build_cover_matrix(inst));
    EXPECT_EQ(r.report.covered_demand, q == 1 ? 11 : 13);
    EXPECT_EQ(r.proof, ProofStatus::optimal);
    EXPECT_TRUE(deployment_violations(inst, r.deployment).empty());
  }
  const Instance q1 = tiny1(1);
  EXPECT_EQ(solve_exact(q1, build_cover_matrix(q1)).deployment,
            make_deployment({{"j2", "A"}, {"j2", "B"}}));
  const Instance q2 = tiny1(2);
  EXPECT_EQ(solve_exact(q2, build_cover_matrix(q2)).deployment,
            make_deployment({{"j1", "A"}, {"j2", "B"}}));
}

TEST(SolveExact, ZeroBasesGivesEmptyDeployment) {
  const Instance inst = tiny1(0);
  const auto r = solve_exact(inst, build_cover_matrix(inst));
  EXPECT_EQ(r.report.covered_demand, 0);
  EXPECT_EQ(r.deployment, Deployment{});
}

TEST(SolveExact, SiteCoveringEverythingIsOptimalAlone) {
  auto raw = testing::tiny1_description(1);
  raw.sites.push_back({"hub", std::nullopt, 2});
  raw.travel_min.push_back({1, 1, 1});
  const Instance inst = validate_instance(raw);
  const auto r = solve_exact(inst, build_cover_matrix(inst));
  EXPECT_EQ(r.report.covered_demand, 17);
  EXPECT_EQ(r.deployment, make_deployment({{"hub", "A"}, {"hub", "B"}}));
}

TEST(SolveExact, SizeGuard) {
  std::mt19937_64 rng(1);
  testing::RandomInstanceLimits lim;
  lim.max_sites = 40;
  InstanceDescription raw;
  do {
    raw = testing::random_description(rng, lim);
  } while (raw.sites.size() <= 25);
  const Instance inst = validate_instance(raw);
  const CoverMatrix m = build_cover_matrix(inst);
  EXPECT_THROW(solve_exact(inst, m), GuardError);

  SolveOptions o;
  o.fixed_bases = std::set<std::string>{};
  for (int j = 0; j < std::min(3, inst.max_bases()); ++j) o.fixed_bases->insert(inst.sites()[j].id);
  EXPECT_NO_THROW(solve_exact(inst, m, o));
}

TEST(SolveExact, TimeLimitReturnsIncumbent) {
  std::mt19937_64 rng(9);
  testing::RandomInstanceLimits lim;
  lim.max_demands = 60;
  lim.max_sites = 25;
  lim.max_fleet = 8;
  auto raw = testing::random_description(rng, lim);
  raw.max_bases = static_cast<int>(raw.sites.size());
  const Instance inst = validate_instance(raw);
  SolveOptions o;
  o.time_limit_s = 0.0;
  const auto r = solve_exact(inst, build_cover_matrix(inst), o);
  EXPECT_TRUE(deployment_violations(inst, r.deployment).empty());
  if (r.proof == ProofStatus::time_limit) {
    EXPECT_GT(r.explored_nodes, 0u);
  } else {
    EXPECT_EQ(r.proof, ProofStatus::optimal);
  }
}

TEST(SolveGreedy, Tiny1Trace) {
  const Instance q2 = tiny1(2);
  const auto r2 = solve_greedy(q2, build_cover_matrix(q2));
  EXPECT_EQ(r2.report.covered_demand, 13);
  EXPECT_EQ(r2.deployment, make_deployment({{"j1", "A"}, {"j2", "B"}}));
  EXPECT_EQ(r2.proof, ProofStatus::heuristic);

  const Instance q1 = tiny1(1);
  const auto r1 = solve_greedy(q1, build_cover_matrix(q1));
  EXPECT_EQ(r1.report.covered_demand, 11);
  EXPECT_EQ(r1.deployment, make_deployment({{"j2", "A"}, {"j2", "B"}}));
}

TEST(SolveGreedy, ZeroDemandGivesEmptyDeployment) {
  auto raw = testing::tiny1_description();
  for (auto& d : raw.demands) {
    for (auto& [t, q] : d.demand_per_type) q = 0;
  }
  const Instance inst = validate_instance(raw);
  EXPECT_EQ(solve_greedy(inst, build_cover_matrix(inst)).deployment, Deployment{});
}

TEST(LocalSearch, Tiny1ImprovesSingleBase) {
  const Instance inst = tiny1(1);
  const CoverMatrix m = build_cover_matrix(inst);
  const Deployment start = make_deployment({{"j1", "A"}, {"j1", "B"}});
  EXPECT_EQ(evaluate_deployment(inst, m, start).covered_demand, 7);
  const Deployment out = improve_local_search(inst, m, start);
  EXPECT_GE(evaluate_deployment(inst, m, out).covered_demand, 11);
  EXPECT_TRUE(deployment_violations(inst, out).empty());
}

TEST(LocalSearch, OptimalInputUnchanged) {
  const Instance inst = tiny1(2);
  const CoverMatrix m = build_cover_matrix(inst);
  const Deployment opt = make_deployment({{"j1", "A"}, {"j2", "B"}});
  EXPECT_EQ(improve_local_search(inst, m, opt), opt);
}

TEST(LocalSearch, EmptyWithZeroBasesUnchanged) {
  const Instance inst = tiny1(0);
  EXPECT_EQ(improve_local_search(inst, build_cover_matrix(inst), Deployment{}), Deployment{});
}

TEST(LocalSearch, RejectsInfeasibleInput) {
  const Instance inst = tiny1(1);
  EXPECT_THROW(improve_local_search(inst, build_cover_matrix(inst),
                                    make_deployment({{"j1", "A"}, {"j2", "B"}})),
               ValidationError);
}

TEST(LocalSearch, NeverDecreasesCoverage) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const Instance inst = validate_instance(testing::random_description(rng));
    const CoverMatrix m = build_cover_matrix(inst);
    const Deployment start = testing::random_deployment(inst, rng);
    const Deployment out = improve_local_search(inst, m, start);
    EXPECT_TRUE(deployment_violations(inst, out).empty());
    EXPECT_GE(evaluate_deployment(inst, m, out).covered_demand,
              evaluate_deployment(inst, m, start).covered_demand);
  }
}

TEST(BruteForce, Tiny1AndGuards) {
  EXPECT_EQ(brute_force_oracle(tiny1(1)).report.covered_demand, 11);
  EXPECT_EQ(brute_force_oracle(tiny1(2)).report.covered_demand, 13);
  EXPECT_EQ(brute_force_oracle(tiny1(0)).report.covered_demand, 0);
  EXPECT_EQ(brute_force_oracle(tiny1(2)).proof, ProofStatus::optimal);

  auto raw = testing::tiny1_description();
  raw.team_types[0].fleet_size = 7;
  EXPECT_THROW(brute_force_oracle(validate_instance(raw)), GuardError);
}

TEST(SolveModes, Tiny1AllAgree) {
  for (int q : {1, 2}) {
    const Instance inst = tiny1(q);
    const CoverMatrix m = build_cover_matrix(inst);
    const std::int64_t expected = q == 1 ? 11 : 13;
    EXPECT_EQ(solve(inst, m, with_mode(SolveMode::exact)).report.covered_demand, expected);
    EXPECT_EQ(solve(inst, m, with_mode(SolveMode::greedy_local_search)).report.covered_demand,
              expected);
    EXPECT_EQ(brute_force_oracle(inst).report.covered_demand, expected);
  }
}

TEST(SolveExact, MatchesOracleOnRandomInstances) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    const Instance inst = validate_instance(testing::random_description(rng));
    const auto exact = solve_exact(inst, build_cover_matrix(inst));
    const auto oracle = brute_force_oracle(inst);
    ASSERT_EQ(exact.report.covered_demand, static_cast<std::int64_t>(oracle.objective))
        << "instance " << k;
    EXPECT_EQ(exact.report.covered_demand, testing::reference_covered(inst, exact.deployment));
  }
}

TEST(SolveExact, MatchesOracleWithFixedElements) {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 150; ++k) {
    const Instance inst = validate_instance(testing::random_description(rng));
    const Deployment base = testing::random_deployment(inst, rng);
    const CoverMatrix m = build_cover_matrix(inst);

    SolveOptions frozen;
    frozen.fixed_bases = base.open_bases;
    EXPECT_EQ(solve_exact(inst, m, frozen).report.covered_demand,
              brute_force_oracle(inst, frozen).report.covered_demand);

    SolveOptions pinned;
    pinned.fixed_placements = base.placements;
    const auto r = solve_exact(inst, m, pinned);
    EXPECT_EQ(r.report.covered_demand, brute_force_oracle(inst, pinned).report.covered_demand);
    for (const auto& p : base.placements) EXPECT_TRUE(r.deployment.placements.contains(p));
  }
}

TEST(SolveExact, MatchesOracleUnderWeightedSumAndReliability) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> lam(0.0, 1.0);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const Instance inst = validate_instance(testing::random_description(rng));
    if (total_demand(inst) == 0) continue;
    const CoverMatrix m = build_cover_matrix(inst);
    SolveOptions o;
    o.lambda = lam(rng);
    EXPECT_NEAR(solve_exact(inst, m, o).objective, brute_force_oracle(inst, o).objective, 1e-12);
    SolveOptions b;
    b.required_teams = {{"A", 1 + k % 2}, {"B", 2}};
    EXPECT_EQ(solve_exact(inst, m, b).report.covered_demand,
              static_cast<std::int64_t>(brute_force_oracle(inst, b).objective));
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(SolveExact, OptimumMonotoneInResources) {
  std::mt19937_64 rng(4242);
  for (int k = 0; k < 100; ++k) {
    const auto raw = testing::random_description(rng);
    const Instance inst = validate_instance(raw);
    const auto base = solve_exact(inst, build_cover_matrix(inst)).report.covered_demand;
    auto optimum = [](const InstanceDescription& d) {
      const Instance i = validate_instance(d);
      return solve_exact(i, build_cover_matrix(i)).report.covered_demand;
    };
    if (raw.max_bases < static_cast<int>(raw.sites.size())) {
      auto more = raw;
      ++more.max_bases;
      EXPECT_GE(optimum(more), base);
    }
    for (std::size_t u = 0; u < raw.team_types.size(); ++u) {
      auto fleet = raw;
      ++fleet.team_types[u].fleet_size;
      EXPECT_GE(optimum(fleet), base);
      auto reach = raw;
      reach.team_types[u].response_limit_min *= 1.5;
      EXPECT_GE(optimum(reach), base);
    }
  }
}

TEST(SolveGreedy, SingleTypeApproximationRatio) {
  std::mt19937_64 rng(555);
  testing::RandomInstanceLimits lim;
  lim.types = 1;
  lim.max_fleet = 4;
  for (int k = 0; k < 200; ++k) {
    auto raw = testing::random_description(rng, lim);
    const Instance inst = validate_instance(raw);
    const CoverMatrix m = build_cover_matrix(inst);
    const auto opt = solve_exact(inst, m).report.covered_demand;
    const auto greedy = solve_greedy(inst, m).report.covered_demand;
    EXPECT_GE(static_cast<double>(greedy), 0.63 * static_cast<double>(opt));
  }
}

TEST(Solvers, Deterministic) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 50; ++k) {
    const Instance inst = validate_instance(testing::random_description(rng));
    const CoverMatrix m = build_cover_matrix(inst);
    for (auto mode : {SolveMode::exact, SolveMode::greedy, SolveMode::greedy_local_search}) {
      EXPECT_EQ(solve(inst, m, with_mode(mode)).deployment,
                solve(inst, m, with_mode(mode)).deployment);
    }
  }
}

TEST(SolveOptionsCheck, RejectsBadFixedElements) {
  const Instance inst = tiny1(1);
  const CoverMatrix m = build_cover_matrix(inst);
  SolveOptions too_many;
  too_many.fixed_bases = std::set<std::string>{"j1", "j2"};
  EXPECT_THROW(solve_exact(inst, m, too_many), ValidationError);
  SolveOptions unknown;
  unknown.fixed_placements = {{"j7", "A"}};
  EXPECT_THROW(solve_greedy(inst, m, unknown), ValidationError);
  SolveOptions bad_lambda;
  bad_lambda.lambda = 1.5;
  EXPECT_THROW(solve_exact(inst, m, bad_lambda), ValidationError);
}

TEST(SolveModeNames, RoundTrip) {
  for (auto mode : {SolveMode::exact, SolveMode::greedy, SolveMode::greedy_local_search}) {
    EXPECT_EQ(parse_solve_mode(to_string(mode)), mode);
  }
  EXPECT_THROW(parse_solve_mode("simplex"), ValidationError);
}

}  // namespace
}  // namespace fleetic
