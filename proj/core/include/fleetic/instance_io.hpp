#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "fleetic/instance.hpp"

namespace fleetic {

/// Parses the instance JSON document. A string-valued `travel_min` names a
/// CSV matrix resolved relative to `base_dir`; an absent `travel_min` is
/// estimated from coordinates.
InstanceDescription parse_instance_json(const nlohmann::json& doc,
                                        const std::filesystem::path& base_dir = {});

Instance load_instance(const std::filesystem::path& path);

/// Serializes with the travel matrix inline.
nlohmann::json instance_to_json(const Instance& instance);

void save_instance(const Instance& instance, const std::filesystem::path& path);

/// Reads a travel matrix CSV (header: leading cell then demand ids; first
/// column: site ids) and reorders it to the given site/demand order.
std::vector<std::vector<double>> read_travel_csv(const std::filesystem::path& path,
                                                 const std::vector<CandidateSite>& sites,
                                                 const std::vector<DemandNode>& demands);

void write_travel_csv(const Instance& instance, const std::filesystem::path& path);

/// FNV-1a digest of the instance content, independent of entity order.
std::string instance_hash(const Instance& instance);

}  // namespace fleetic
