#include "fleetic/coverage.hpp"

#include <algorithm>
#include <bit>

#include "fleetic/error.hpp"

namespace fleetic {

CoverMatrix::CoverMatrix(std::size_t types, std::size_t sites, std::size_t demands)
    : types_(types),
      sites_(sites),
      demands_(demands),
      words_((demands + 63) / 64),
      bits_(types * sites * words_, 0) {}

std::size_t CoverMatrix::row_count(std::size_t type, std::size_t site) const {
  std::size_t n = 0;
  for (auto w : row(type, site)) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

CoverMatrix build_cover_matrix(const Instance& instance) {
  CoverMatrix cover(instance.num_types(), instance.num_sites(), instance.num_demands());
  for (std::size_t u = 0; u < instance.num_types(); ++u) {
    const double limit = instance.team_types()[u].response_limit_min;
    for (std::size_t j = 0; j < instance.num_sites(); ++j) {
      for (std::size_t i = 0; i < instance.num_demands(); ++i) {
        if (instance.travel(j, i) <= limit) cover.set(u, j, i);
      }
    }
  }
  return cover;
}

CoverageReport evaluate_deployment(const Instance& instance, const CoverMatrix& cover,
                                   const Deployment& deployment) {
  const std::vector<int> ones(instance.num_types(), 1);
  return evaluate_deployment(instance, cover, deployment, ones);
}

CoverageReport evaluate_deployment(const Instance& instance, const CoverMatrix& cover,
                                   const Deployment& deployment, std::span<const int> required) {
  const std::size_t n_types = instance.num_types();
  const std::size_t n_demands = instance.num_demands();
  if (required.size() != n_types) {
    throw ValidationError("coverage requirement needs one entry per team type");
  }
  for (const auto& base : deployment.open_bases) {
    if (!instance.site_index(base)) throw ValidationError("unknown site '" + base + "'");
  }

  CoverageReport report;
  report.cover_flags.assign(n_demands, std::vector<bool>(n_types, false));
  report.covering_sites.assign(n_demands, std::vector<std::vector<std::string>>(n_types));
  report.covered_by_type.assign(n_types, 0);
  report.demand_by_type.assign(n_types, 0);

  // std::set iteration gives placements sorted by (site id, type id), so the
  // covering site lists come out sorted by id.
  for (const auto& p : deployment.placements) {
    auto j = instance.site_index(p.site);
    auto u = instance.type_index(p.type);
    if (!j) throw ValidationError("placement references unknown site '" + p.site + "'");
    if (!u) throw ValidationError("placement references unknown team type '" + p.type + "'");
    const auto row = cover.row(*u, *j);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        report.covering_sites[i][*u].push_back(p.site);
      }
    }
  }

  for (std::size_t i = 0; i < n_demands; ++i) {
    for (std::size_t u = 0; u < n_types; ++u) {
      const std::int64_t q = instance.demand(i, u);
      report.demand_by_type[u] += q;
      const bool covered =
          report.covering_sites[i][u].size() >= static_cast<std::size_t>(std::max(required[u], 1));
      report.cover_flags[i][u] = covered;
      if (covered) report.covered_by_type[u] += q;
    }
  }
  for (std::size_t u = 0; u < n_types; ++u) {
    report.covered_demand += report.covered_by_type[u];
    report.total_demand += report.demand_by_type[u];
  }
  report.tx_cob = report.total_demand > 0 ? static_cast<double>(report.covered_demand) /
                                                static_cast<double>(report.total_demand)
                                          : 0.0;
  report.open_base_count = static_cast<int>(deployment.open_bases.size());
  const int q_max = instance.max_bases();
  report.tx_red_bases =
      q_max > 0 ? static_cast<double>(q_max - report.open_base_count) / q_max : 1.0;
  return report;
}

}  // namespace fleetic
