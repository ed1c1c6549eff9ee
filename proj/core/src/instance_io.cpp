#include "fleetic/instance_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "fleetic/csv.hpp"
#include "fleetic/error.hpp"

namespace fleetic {

namespace {

using nlohmann::json;

std::optional<LatLon> read_coordinates(const json& item) {
  const bool has_lat = item.contains("lat");
  const bool has_lon = item.contains("lon");
  if (!has_lat && !has_lon) return std::nullopt;
  if (has_lat != has_lon) {
    throw ValidationError("entity '" + item.value("id", std::string{}) +
                          "' must give both lat and lon");
  }
  return LatLon{item.at("lat").get<double>(), item.at("lon").get<double>()};
}

void write_coordinates(json& item, const std::optional<LatLon>& c) {
  if (!c) return;
  item["lat"] = c->lat;
  item["lon"] = c->lon;
}

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("instance is missing '") + key + "'");
  return doc.at(key);
}

}  // namespace

InstanceDescription parse_instance_json(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw ValidationError("instance document must be a JSON object");
  InstanceDescription raw;
  try {
    for (const auto& t : require(doc, "team_types")) {
      raw.team_types.push_back(TeamType{t.at("id").get<std::string>(),
                                        t.at("response_limit_min").get<double>(),
                                        t.at("fleet_size").get<int>()});
    }
    for (const auto& d : require(doc, "demands")) {
      DemandNode node;
      node.id = d.at("id").get<std::string>();
      node.coordinates = read_coordinates(d);
      const char* key = d.contains("demand_per_type") ? "demand_per_type" : "demand";
      if (d.contains(key)) {
        for (const auto& [type, calls] : d.at(key).items()) {
          node.demand_per_type[type] = calls.get<std::int64_t>();
        }
      }
      raw.demands.push_back(std::move(node));
    }
    const int default_capacity = static_cast<int>(raw.team_types.size());
    for (const auto& s : require(doc, "sites")) {
      CandidateSite site;
      site.id = s.at("id").get<std::string>();
      site.coordinates = read_coordinates(s);
      site.capacity = s.value("capacity", default_capacity);
      raw.sites.push_back(std::move(site));
    }
    raw.max_bases = require(doc, "max_bases").get<int>();

    if (!doc.contains("travel_min")) {
      TravelModel model;
      if (doc.contains("travel_model")) {
        const auto& m = doc.at("travel_model");
        model.speed_kmh = m.value("speed_kmh", model.speed_kmh);
        model.detour_factor = m.value("detour_factor", model.detour_factor);
      }
      raw.travel_min = estimate_travel_minutes(raw.sites, raw.demands, model);
    } else if (doc.at("travel_min").is_string()) {
      std::filesystem::path csv_path = doc.at("travel_min").get<std::string>();
      if (csv_path.is_relative()) csv_path = base_dir / csv_path;
      raw.travel_min = read_travel_csv(csv_path, raw.sites, raw.demands);
    } else {
      raw.travel_min = doc.at("travel_min").get<std::vector<std::vector<double>>>();
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed instance: ") + e.what());
  }
  return raw;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError("cannot parse instance '" + path.string() + "': " + e.what());
  }
  return validate_instance(parse_instance_json(doc, path.parent_path()));
}

json instance_to_json(const Instance& instance) {
  json doc;
  doc["team_types"] = json::array();
  for (const auto& t : instance.team_types()) {
    doc["team_types"].push_back(
        {{"id", t.id}, {"response_limit_min", t.response_limit_min}, {"fleet_size", t.fleet_size}});
  }
  doc["demands"] = json::array();
  for (const auto& d : instance.demands()) {
    json item = {{"id", d.id}};
    write_coordinates(item, d.coordinates);
    item["demand_per_type"] = d.demand_per_type;
    doc["demands"].push_back(std::move(item));
  }
  doc["sites"] = json::array();
  for (const auto& s : instance.sites()) {
    json item = {{"id", s.id}};
    write_coordinates(item, s.coordinates);
    item["capacity"] = s.capacity;
    doc["sites"].push_back(std::move(item));
  }
  doc["max_bases"] = instance.max_bases();
  doc["travel_min"] = instance.description().travel_min;
  return doc;
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write instance '" + path.string() + "'");
  out << instance_to_json(instance).dump(1) << '\n';
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::vector<std::vector<double>> read_travel_csv(const std::filesystem::path& path,
                                                 const std::vector<CandidateSite>& sites,
                                                 const std::vector<DemandNode>& demands) {
  const csv::Table table = csv::read_file(path);
  if (table.header.size() != demands.size() + 1) {
    throw ValidationError("travel matrix '" + path.string() + "' has " +
                          std::to_string(table.header.size() - 1) + " demand columns, expected " +
                          std::to_string(demands.size()));
  }
  if (table.rows.size() != sites.size()) {
    throw ValidationError("travel matrix '" + path.string() + "' has " +
                          std::to_string(table.rows.size()) + " site rows, expected " +
                          std::to_string(sites.size()));
  }
  std::vector<std::size_t> column_of(demands.size());
  for (std::size_t i = 0; i < demands.size(); ++i) {
    auto col = table.column(demands[i].id);
    if (!col || *col == 0) {
      throw ValidationError("travel matrix has no column for demand '" + demands[i].id + "'");
    }
    column_of[i] = *col;
  }
  std::vector<std::vector<double>> out(sites.size());
  for (std::size_t j = 0; j < sites.size(); ++j) {
    auto row = std::find_if(table.rows.begin(), table.rows.end(),
                            [&](const auto& r) { return r[0] == sites[j].id; });
    if (row == table.rows.end()) {
      throw ValidationError("travel matrix has no row for site '" + sites[j].id + "'");
    }
    out[j].reserve(demands.size());
    for (std::size_t i = 0; i < demands.size(); ++i) {
      out[j].push_back(csv::parse_number((*row)[column_of[i]], "travel time"));
    }
  }
  return out;
}

void write_travel_csv(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  std::vector<std::string> fields{"site"};
  for (const auto& d : instance.demands()) fields.push_back(d.id);
  csv::write_record(out, fields);
  for (std::size_t j = 0; j < instance.num_sites(); ++j) {
    fields.assign(1, instance.sites()[j].id);
    for (std::size_t i = 0; i < instance.num_demands(); ++i) {
      fields.push_back(csv::format_number(instance.travel(j, i)));
    }
    csv::write_record(out, fields);
  }
}

std::string instance_hash(const Instance& instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;  // field separator
    h *= 0x100000001b3ULL;
  };
  auto sorted_order = [](const auto& items) {
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return items[a].id < items[b].id; });
    return order;
  };
  const auto types = sorted_order(instance.team_types());
  const auto demands = sorted_order(instance.demands());
  const auto sites = sorted_order(instance.sites());

  feed("types");
  for (auto u : types) {
    const auto& t = instance.team_types()[u];
    feed(t.id);
    feed(csv::format_number(t.response_limit_min));
    feed(std::to_string(t.fleet_size));
  }
  feed("demands");
  for (auto i : demands) {
    const auto& d = instance.demands()[i];
    feed(d.id);
    if (d.coordinates) {
      feed(csv::format_number(d.coordinates->lat));
      feed(csv::format_number(d.coordinates->lon));
    }
    for (auto u : types) feed(std::to_string(instance.demand(i, u)));
  }
  feed("sites");
  for (auto j : sites) {
    const auto& s = instance.sites()[j];
    feed(s.id);
    if (s.coordinates) {
      feed(csv::format_number(s.coordinates->lat));
      feed(csv::format_number(s.coordinates->lon));
    }
    feed(std::to_string(s.capacity));
    for (auto i : demands) feed(csv::format_number(instance.travel(j, i)));
  }
  feed("max_bases");
  feed(std::to_string(instance.max_bases()));

  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace fleetic
