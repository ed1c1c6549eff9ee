#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "fleetic/solver.hpp"

namespace fleetic {

nlohmann::json deployment_to_json(const Deployment& deployment);
Deployment deployment_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const Instance& instance, const CoverageReport& report);
CoverageReport report_from_json(const Instance& instance, const nlohmann::json& doc);

nlohmann::json options_to_json(const SolveOptions& options);
SolveOptions options_from_json(const nlohmann::json& doc);

/// Solution file: instance hash, options, deployment, coverage report and
/// proof status.
nlohmann::json solution_to_json(const Instance& instance, const SolveResult& result,
                                const SolveOptions& options);

struct SolutionFile {
  std::optional<std::string> instance_hash;
  Deployment deployment;
  std::optional<SolveOptions> options;
  std::optional<ProofStatus> proof;
  nlohmann::json raw;
};

/// Reads a solution file, or a bare {"open_bases", "placements"} document.
/// With an instance, a recorded hash must match it (ValidationError).
SolutionFile load_solution(const std::filesystem::path& path, const Instance* instance = nullptr);

void write_json_file(const nlohmann::json& doc, const std::filesystem::path& path);

}  // namespace fleetic
