#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fleetic/instance.hpp"

namespace fleetic {

/// Per team type, one packed bit row per site: bit i of row (u, j) is set
/// iff travel(j, i) <= response_limit(u). The boundary is inclusive.
class CoverMatrix {
 public:
  CoverMatrix() = default;
  CoverMatrix(std::size_t types, std::size_t sites, std::size_t demands);

  std::size_t num_types() const { return types_; }
  std::size_t num_sites() const { return sites_; }
  std::size_t num_demands() const { return demands_; }
  std::size_t words_per_row() const { return words_; }

  bool covers(std::size_t type, std::size_t site, std::size_t demand) const {
    return (row(type, site)[demand / 64] >> (demand % 64)) & 1U;
  }

  std::span<const std::uint64_t> row(std::size_t type, std::size_t site) const {
    return {bits_.data() + (type * sites_ + site) * words_, words_};
  }

  void set(std::size_t type, std::size_t site, std::size_t demand) {
    bits_[(type * sites_ + site) * words_ + demand / 64] |= std::uint64_t{1} << (demand % 64);
  }

  /// Number of demand nodes covered by (type, site).
  std::size_t row_count(std::size_t type, std::size_t site) const;

 private:
  std::size_t types_ = 0;
  std::size_t sites_ = 0;
  std::size_t demands_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

CoverMatrix build_cover_matrix(const Instance& instance);

/// Coverage of a deployment. Indexed [demand][type] in instance order.
struct CoverageReport {
  std::vector<std::vector<bool>> cover_flags;                            // k_iu
  std::vector<std::vector<std::vector<std::string>>> covering_sites;   // {j : y_ji^u = 1}
  std::vector<std::int64_t> covered_by_type;
  std::vector<std::int64_t> demand_by_type;
  std::int64_t covered_demand = 0;
  std::int64_t total_demand = 0;
  double tx_cob = 0.0;  // covered / total, 0 when there is no demand
  int open_base_count = 0;
  double tx_red_bases = 1.0;  // (Q - open) / Q, 1 when Q = 0

  bool operator==(const CoverageReport&) const = default;
};

/// Standard coverage: (i, u) is covered when at least one placed team of
/// type u reaches i within S^u. Throws ValidationError on unknown ids.
CoverageReport evaluate_deployment(const Instance& instance, const CoverMatrix& cover,
                                   const Deployment& deployment);

/// Generalized coverage: (i, u) counts only when at least required[u]
/// placed teams of type u reach it. required must have one entry per type.
CoverageReport evaluate_deployment(const Instance& instance, const CoverMatrix& cover,
                                   const Deployment& deployment, std::span<const int> required);

}  // namespace fleetic
