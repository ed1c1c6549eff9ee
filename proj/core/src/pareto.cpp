#include "fleetic/pareto.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "fleetic/csv.hpp"
#include "fleetic/error.hpp"

namespace fleetic {

double scalarized_objective(const CoverageReport& report, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ValidationError("lambda must lie in [0, 1]");
  if (report.total_demand <= 0) {
    throw ValidationError("weighted-sum objective is undefined when total demand is zero");
  }
  return lambda * report.tx_cob + (1.0 - lambda) * report.tx_red_bases;
}

std::vector<ParetoPoint> sweep_lambda(const Instance& instance, const CoverMatrix& cover,
                                      const SweepOptions& options) {
  if (options.grid_size < 2) throw ValidationError("lambda grid needs at least 2 values");
  if (total_demand(instance) == 0) {
    throw ValidationError("weighted-sum objective is undefined when total demand is zero");
  }

  SolveOptions base = options.solve;
  if (base.mode == SolveMode::exact) {
    const std::size_t searched =
        base.fixed_bases ? base.fixed_bases->size() : instance.num_sites();
    if (searched > static_cast<std::size_t>(std::max(base.exact_site_limit, 0))) {
      base.mode = SolveMode::greedy_local_search;
    }
  }

  const auto n = static_cast<std::size_t>(options.grid_size);
  std::vector<ParetoPoint> points(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        SolveOptions opts = base;
        // k / (n - 1) keeps the grid endpoints exactly 0 and 1.
        const double lambda = static_cast<double>(k) / static_cast<double>(n - 1);
        opts.lambda = lambda;
        const SolveResult r = solve(instance, cover, opts);
        ParetoPoint& pt = points[k];
        pt.lambda = lambda;
        pt.f1_tx_cob = r.report.tx_cob;
        pt.f2_tx_red_bases = r.report.tx_red_bases;
        pt.scalar_score = scalarized_objective(r.report, lambda);
        pt.deployment = r.deployment;
        pt.covered_calls = r.report.covered_demand;
        pt.bases_open = r.report.open_base_count;
        pt.proof = r.proof;
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  unsigned jobs = options.jobs ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return points;
}

bool dominates(const ParetoPoint& a, const ParetoPoint& b) {
  return a.f1_tx_cob >= b.f1_tx_cob && a.f2_tx_red_bases >= b.f2_tx_red_bases &&
         (a.f1_tx_cob > b.f1_tx_cob || a.f2_tx_red_bases > b.f2_tx_red_bases);
}

std::vector<ParetoPoint> pareto_filter(const std::vector<ParetoPoint>& points) {
  std::vector<ParetoPoint> unique;
  for (const auto& p : points) {
    auto same = std::find_if(unique.begin(), unique.end(), [&](const ParetoPoint& q) {
      return q.f1_tx_cob == p.f1_tx_cob && q.f2_tx_red_bases == p.f2_tx_red_bases;
    });
    if (same == unique.end()) {
      unique.push_back(p);
    } else if (p.lambda < same->lambda) {
      *same = p;
    }
  }
  std::vector<ParetoPoint> front;
  for (const auto& p : unique) {
    const bool dominated = std::any_of(unique.begin(), unique.end(),
                                       [&](const ParetoPoint& q) { return dominates(q, p); });
    if (!dominated) front.push_back(p);
  }
  std::sort(front.begin(), front.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
    if (a.f1_tx_cob != b.f1_tx_cob) return a.f1_tx_cob < b.f1_tx_cob;
    return a.f2_tx_red_bases > b.f2_tx_red_bases;
  });
  return front;
}

void write_pareto_csv(const std::vector<ParetoPoint>& points, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_pareto_csv(points, out);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_pareto_csv(const std::vector<ParetoPoint>& points, std::ostream& out) {
  csv::write_record(out, {"lambda", "tx_cob", "tx_red_bases", "bases_open", "covered_calls"});
  for (const auto& p : points) {
    csv::write_record(out, {csv::format_number(p.lambda), csv::format_number(p.f1_tx_cob),
                            csv::format_number(p.f2_tx_red_bases), std::to_string(p.bases_open),
                            std::to_string(p.covered_calls)});
  }
}

}  // namespace fleetic
