#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "fleetic/error.hpp"
#include "fleetic/geojson.hpp"
#include "fleetic/instance_io.hpp"
#include "fleetic/solution_io.hpp"
#include "fleetic/solver.hpp"

namespace fleetic {
namespace {

using nlohmann::json;
using testing::make_deployment;
using testing::tiny1;

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("fleetic_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  void write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
  }
  std::filesystem::path dir_;
};

const char* kTinyJson = R"({
  "team_types": [{"id": "A", "response_limit_min": 10, "fleet_size": 1},
                 {"id": "B", "response_limit_min": 8, "fleet_size": 1}],
  "demands": [{"id": "i1", "demand_per_type": {"A": 4, "B": 2}},
              {"id": "i2", "demand_per_type": {"A": 1, "B": 3}},
              {"id": "i3", "demand_per_type": {"A": 2, "B": 5}}],
  "sites": [{"id": "j1", "capacity": 2}, {"id": "j2"}],
  "max_bases": 2,
  "travel_min": TRAVEL
})";

std::string tiny_json(const std::string& travel) {
  std::string s = kTinyJson;
  s.replace(s.find("TRAVEL"), 6, travel);
  return s;
}

using InstanceIo = TempDir;

TEST_F(InstanceIo, InlineAndCsvTravelAgree) {
  write("inline.json", tiny_json("[[5, 9, 12], [11, 7, 6]]"));
  // Columns and rows deliberately out of order.
  write("travel.csv", "site,i3,i1,i2\nj2,6,11,7\nj1,12,5,9\n");
  write("csv.json", tiny_json("\"travel.csv\""));
  const Instance a = load_instance(dir_ / "inline.json");
  const Instance b = load_instance(dir_ / "csv.json");
  EXPECT_TRUE(a == b);
  EXPECT_EQ(a.sites()[1].capacity, 2);
  EXPECT_DOUBLE_EQ(a.travel(1, 2), 6.0);
  const CoverMatrix m = build_cover_matrix(a);
  EXPECT_EQ(solve_exact(a, m).report.covered_demand, 13);
}

TEST_F(InstanceIo, ErrorsCarryKinds) {
  EXPECT_THROW(load_instance(dir_ / "missing.json"), IoError);
  write("broken.json", "{ not json");
  EXPECT_THROW(load_instance(dir_ / "broken.json"), IoError);
  write("short.json", tiny_json("[[5, 9], [11, 7, 6]]"));
  EXPECT_THROW(load_instance(dir_ / "short.json"), ValidationError);
  write("badcsv.json", tiny_json("\"nowhere.csv\""));
  EXPECT_THROW(load_instance(dir_ / "badcsv.json"), IoError);
  write("travel.csv", "site,i1,i2\nj1,1,2\nj2,3,4\n");
  write("missingcol.json", tiny_json("\"travel.csv\""));
  EXPECT_THROW(load_instance(dir_ / "missingcol.json"), ValidationError);
}

TEST_F(InstanceIo, SaveLoadRoundTrip) {
  const Instance inst = tiny1();
  save_instance(inst, dir_ / "out.json");
  EXPECT_TRUE(load_instance(dir_ / "out.json") == inst);
  write_travel_csv(inst, dir_ / "t.csv");
  const auto travel = read_travel_csv(dir_ / "t.csv", inst.sites(), inst.demands());
  EXPECT_EQ(travel, inst.description().travel_min);
}

TEST(InstanceHash, IndependentOfEntityOrder) {
  auto raw = testing::tiny1_description();
  const std::string h = instance_hash(validate_instance(raw));
  EXPECT_EQ(h.size(), 16U);
  std::swap(raw.demands[0], raw.demands[2]);
  for (auto& row : raw.travel_min) std::swap(row[0], row[2]);
  std::swap(raw.sites[0], raw.sites[1]);
  std::swap(raw.travel_min[0], raw.travel_min[1]);
  std::swap(raw.team_types[0], raw.team_types[1]);
  EXPECT_EQ(instance_hash(validate_instance(raw)), h);
  raw.travel_min[0][0] += 1.0;
  EXPECT_NE(instance_hash(validate_instance(raw)), h);
}

TEST(InstanceJson, MissingTravelIsEstimated) {
  json doc = json::parse(tiny_json("null"));
  doc.erase("travel_min");
  EXPECT_THROW(parse_instance_json(doc), ValidationError);  // no coordinates
  doc["demands"][0]["lat"] = -19.9;
  doc["demands"][0]["lon"] = -43.9;
  doc["demands"][1]["lat"] = -19.91;
  doc["demands"][1]["lon"] = -43.9;
  doc["demands"][2]["lat"] = -19.92;
  doc["demands"][2]["lon"] = -43.9;
  doc["sites"][0]["lat"] = -19.9;
  doc["sites"][0]["lon"] = -43.9;
  doc["sites"][1]["lat"] = -20.0;
  doc["sites"][1]["lon"] = -43.9;
  const Instance inst = validate_instance(parse_instance_json(doc));
  EXPECT_DOUBLE_EQ(inst.travel(0, 0), 0.0);
  EXPECT_GT(inst.travel(1, 0), inst.travel(1, 2));
}

using SolutionIo = TempDir;

TEST_F(SolutionIo, RoundTripAndHashCheck) {
  const Instance inst = tiny1();
  const CoverMatrix m = build_cover_matrix(inst);
  SolveOptions options;
  options.mode = SolveMode::greedy_local_search;
  options.lambda = 0.6;
  options.required_teams = {{"B", 1}};
  const SolveResult r = solve(inst, m, options);
  write_json_file(solution_to_json(inst, r, options), dir_ / "sol.json");

  const SolutionFile back = load_solution(dir_ / "sol.json", &inst);
  EXPECT_EQ(back.deployment, r.deployment);
  ASSERT_TRUE(back.options);
  EXPECT_EQ(back.options->lambda, 0.6);
  EXPECT_EQ(back.options->mode, SolveMode::greedy_local_search);
  EXPECT_EQ(back.proof, ProofStatus::heuristic);
  EXPECT_EQ(back.instance_hash, instance_hash(inst));
  EXPECT_EQ(report_from_json(inst, back.raw.at("report")), r.report);

  const Instance other = tiny1(1);
  EXPECT_THROW(load_solution(dir_ / "sol.json", &other), ValidationError);
}

TEST_F(SolutionIo, BareDeployment) {
  write("dep.json", R"({"open_bases": ["j2"], "placements": [{"site": "j2", "type": "A"}]})");
  const SolutionFile f = load_solution(dir_ / "dep.json", nullptr);
  EXPECT_EQ(f.deployment, make_deployment({{"j2", "A"}}));
  EXPECT_FALSE(f.instance_hash);
  write("bad.json", R"({"open_bases": "j2"})");
  EXPECT_THROW(load_solution(dir_ / "bad.json"), ValidationError);
}

TEST(GeoJson, FeaturesForTwoTeamBase) {
  const Instance inst = tiny1();
  const CoverMatrix m = build_cover_matrix(inst);
  const json doc = export_geojson(inst, m, make_deployment({{"j2", "A"}, {"j2", "B"}}));
  EXPECT_EQ(doc.at("type"), "FeatureCollection");
  const auto& features = doc.at("features");
  ASSERT_EQ(features.size(), 4U);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(features[k]["properties"]["kind"], "demand");
  const auto& base = features[3];
  EXPECT_EQ(base["properties"]["kind"], "base");
  EXPECT_EQ(base["properties"]["id"], "j2");
  EXPECT_EQ(base["properties"]["teams"], json({"A", "B"}));
  EXPECT_EQ(base["geometry"]["type"], "Point");
  EXPECT_DOUBLE_EQ(base["geometry"]["coordinates"][0].get<double>(), -43.92);
  EXPECT_DOUBLE_EQ(base["geometry"]["coordinates"][1].get<double>(), -19.93);
  // j2 reaches i2 and i3 for both types (7, 6 <= 8) but not i1.
  EXPECT_EQ(features[0]["properties"]["covered"]["A"], false);
  EXPECT_EQ(features[1]["properties"]["covered"]["B"], true);
  EXPECT_EQ(features[2]["properties"]["covered"]["B"], true);
  EXPECT_EQ(doc.at("covered_calls"), 11);
}

TEST(GeoJson, EmptyDeploymentAndMissingCoordinates) {
  const Instance inst = tiny1();
  const CoverMatrix m = build_cover_matrix(inst);
  const json doc = export_geojson(inst, m, Deployment{});
  EXPECT_EQ(doc.at("features").size(), 3U);
  EXPECT_EQ(doc.at("covered_calls"), 0);

  auto raw = testing::tiny1_description();
  raw.demands[1].coordinates.reset();
  const Instance bare = validate_instance(raw);
  EXPECT_THROW(export_geojson(bare, build_cover_matrix(bare), Deployment{}), ValidationError);
}

}  // namespace
}  // namespace fleetic
