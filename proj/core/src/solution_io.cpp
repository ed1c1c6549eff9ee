#include "fleetic/solution_io.hpp"

#include <fstream>

#include "fleetic/error.hpp"
#include "fleetic/instance_io.hpp"

namespace fleetic {

using nlohmann::json;

json deployment_to_json(const Deployment& deployment) {
  json doc;
  doc["open_bases"] = deployment.open_bases;
  doc["placements"] = json::array();
  for (const auto& p : deployment.placements) {
    doc["placements"].push_back({{"site", p.site}, {"type", p.type}});
  }
  return doc;
}

Deployment deployment_from_json(const json& doc) {
  Deployment out;
  try {
    for (const auto& b : doc.at("open_bases")) out.open_bases.insert(b.get<std::string>());
    for (const auto& p : doc.at("placements")) {
      out.placements.insert({p.at("site").get<std::string>(), p.at("type").get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed deployment: ") + e.what());
  }
  return out;
}

json report_to_json(const Instance& instance, const CoverageReport& report) {
  json doc;
  doc["covered_demand"] = report.covered_demand;
  doc["total_demand"] = report.total_demand;
  doc["tx_cob"] = report.tx_cob;
  doc["open_base_count"] = report.open_base_count;
  doc["tx_red_bases"] = report.tx_red_bases;
  json by_type = json::object();
  for (std::size_t u = 0; u < instance.num_types(); ++u) {
    by_type[instance.team_types()[u].id] = {{"covered", report.covered_by_type[u]},
                                            {"total", report.demand_by_type[u]}};
  }
  doc["by_type"] = std::move(by_type);
  json nodes = json::object();
  for (std::size_t i = 0; i < instance.num_demands(); ++i) {
    json node = json::object();
    for (std::size_t u = 0; u < instance.num_types(); ++u) {
      node[instance.team_types()[u].id] = {{"covered", static_cast<bool>(report.cover_flags[i][u])},
                                           {"sites", report.covering_sites[i][u]}};
    }
    nodes[instance.demands()[i].id] = std::move(node);
  }
  doc["demands"] = std::move(nodes);
  return doc;
}

CoverageReport report_from_json(const Instance& instance, const json& doc) {
  CoverageReport r;
  try {
    r.covered_demand = doc.at("covered_demand").get<std::int64_t>();
    r.total_demand = doc.at("total_demand").get<std::int64_t>();
    r.tx_cob = doc.at("tx_cob").get<double>();
    r.open_base_count = doc.at("open_base_count").get<int>();
    r.tx_red_bases = doc.at("tx_red_bases").get<double>();
    const std::size_t n_types = instance.num_types();
    r.covered_by_type.assign(n_types, 0);
    r.demand_by_type.assign(n_types, 0);
    for (std::size_t u = 0; u < n_types; ++u) {
      const auto& t = doc.at("by_type").at(instance.team_types()[u].id);
      r.covered_by_type[u] = t.at("covered").get<std::int64_t>();
      r.demand_by_type[u] = t.at("total").get<std::int64_t>();
    }
    r.cover_flags.assign(instance.num_demands(), std::vector<bool>(n_types, false));
    r.covering_sites.assign(instance.num_demands(), std::vector<std::vector<std::string>>(n_types));
    for (std::size_t i = 0; i < instance.num_demands(); ++i) {
      const auto& node = doc.at("demands").at(instance.demands()[i].id);
      for (std::size_t u = 0; u < n_types; ++u) {
        const auto& cell = node.at(instance.team_types()[u].id);
        r.cover_flags[i][u] = cell.at("covered").get<bool>();
        r.covering_sites[i][u] = cell.at("sites").get<std::vector<std::string>>();
      }
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed coverage report: ") + e.what());
  }
  return r;
}

json options_to_json(const SolveOptions& options) {
  json doc;
  doc["mode"] = to_string(options.mode);
  doc["exact_site_limit"] = options.exact_site_limit;
  doc["fixed_bases"] = options.fixed_bases ? json(*options.fixed_bases) : json(nullptr);
  doc["fixed_placements"] = json::array();
  for (const auto& p : options.fixed_placements) {
    doc["fixed_placements"].push_back({{"site", p.site}, {"type", p.type}});
  }
  doc["time_limit_s"] = options.time_limit_s ? json(*options.time_limit_s) : json(nullptr);
  doc["lambda"] = options.lambda ? json(*options.lambda) : json(nullptr);
  doc["required_teams"] = options.required_teams;
  return doc;
}

SolveOptions options_from_json(const json& doc) {
  SolveOptions o;
  try {
    o.mode = parse_solve_mode(doc.value("mode", std::string("exact")));
    o.exact_site_limit = doc.value("exact_site_limit", o.exact_site_limit);
    if (doc.contains("fixed_bases") && !doc.at("fixed_bases").is_null()) {
      o.fixed_bases = doc.at("fixed_bases").get<std::set<std::string>>();
    }
    if (doc.contains("fixed_placements")) {
      for (const auto& p : doc.at("fixed_placements")) {
        o.fixed_placements.insert(
            {p.at("site").get<std::string>(), p.at("type").get<std::string>()});
      }
    }
    if (doc.contains("time_limit_s") && !doc.at("time_limit_s").is_null()) {
      o.time_limit_s = doc.at("time_limit_s").get<double>();
    }
    if (doc.contains("lambda") && !doc.at("lambda").is_null()) {
      o.lambda = doc.at("lambda").get<double>();
    }
    if (doc.contains("required_teams")) {
      o.required_teams = doc.at("required_teams").get<std::map<std::string, int>>();
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed solve options: ") + e.what());
  }
  return o;
}

json solution_to_json(const Instance& instance, const SolveResult& result,
                      const SolveOptions& options) {
  json doc;
  doc["instance_hash"] = instance_hash(instance);
  doc["options"] = options_to_json(options);
  doc["deployment"] = deployment_to_json(result.deployment);
  doc["report"] = report_to_json(instance, result.report);
  doc["proof"] = to_string(result.proof);
  doc["explored_nodes"] = result.explored_nodes;
  doc["wall_time_s"] = result.wall_time_s;
  doc["objective"] = result.objective;
  return doc;
}

SolutionFile load_solution(const std::filesystem::path& path, const Instance* instance) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open solution '" + path.string() + "'");
  SolutionFile out;
  try {
    out.raw = json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError("cannot parse solution '" + path.string() + "': " + e.what());
  }
  const json& doc = out.raw;
  if (!doc.is_object()) throw ValidationError("solution must be a JSON object");
  out.deployment = deployment_from_json(doc.contains("deployment") ? doc.at("deployment") : doc);
  if (doc.contains("instance_hash")) out.instance_hash = doc.at("instance_hash").get<std::string>();
  if (doc.contains("options")) out.options = options_from_json(doc.at("options"));
  if (doc.contains("proof")) out.proof = parse_proof_status(doc.at("proof").get<std::string>());
  if (instance && out.instance_hash && *out.instance_hash != instance_hash(*instance)) {
    throw ValidationError("solution '" + path.string() +
                          "' was computed on a different instance (hash mismatch)");
  }
  return out;
}

void write_json_file(const json& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace fleetic
