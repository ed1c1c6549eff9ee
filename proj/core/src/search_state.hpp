#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "fleetic/coverage.hpp"
#include "fleetic/instance.hpp"
#include "fleetic/solver.hpp"

namespace fleetic::detail {

/// SolveOptions translated to dense indices and checked against the instance.
struct Problem {
  const Instance* instance = nullptr;
  const CoverMatrix* cover = nullptr;
  std::size_t types = 0;
  std::size_t sites = 0;
  std::size_t demands = 0;

  std::vector<int> required;      // b_u, >= 1
  std::vector<int> fleet;         // P^u
  std::vector<int> capacity;      // C_j
  std::vector<std::int64_t> q;    // [u * demands + i]
  std::int64_t total_demand = 0;
  int max_bases = 0;
  std::optional<double> lambda;

  bool frozen_bases = false;
  std::vector<char> site_allowed;  // team may be placed at j
  std::vector<char> forced_open;   // base j always open
  std::vector<char> locked;        // [j * types + u] fixed placement

  double score(std::int64_t covered, int open_bases) const {
    if (!lambda) return static_cast<double>(covered);
    const double f1 =
        total_demand > 0 ? static_cast<double>(covered) / static_cast<double>(total_demand) : 0.0;
    const double f2 =
        max_bases > 0 ? static_cast<double>(max_bases - open_bases) / max_bases : 1.0;
    return *lambda * f1 + (1.0 - *lambda) * f2;
  }

  /// Score change from opening one more base with no coverage change.
  double base_cost() const {
    if (!lambda || max_bases == 0) return 0.0;
    return (1.0 - *lambda) / max_bases;
  }

  /// Score per covered call.
  double coverage_weight() const {
    if (!lambda) return 1.0;
    return total_demand > 0 ? *lambda / static_cast<double>(total_demand) : 0.0;
  }
};

Problem make_problem(const Instance& instance, const CoverMatrix& cover,
                     const SolveOptions& options);

/// Mutable assignment with incremental per-(type, demand) covering counts.
class SearchState {
 public:
  /// Starts from forced bases and fixed placements.
  explicit SearchState(const Problem& problem);

  /// Loads an arbitrary deployment on top of an empty state. Throws
  /// ValidationError when infeasible or missing a fixed placement.
  void load(const Deployment& deployment);

  const Problem& problem() const { return *p_; }

  bool placed(std::size_t j, std::size_t u) const { return placed_[j * p_->types + u]; }
  bool locked(std::size_t j, std::size_t u) const { return p_->locked[j * p_->types + u]; }
  bool is_open(std::size_t j) const { return open_[j]; }
  int load_at(std::size_t j) const { return load_[j]; }
  int used(std::size_t u) const { return used_[u]; }
  int open_count() const { return open_count_; }
  std::int64_t covered() const { return covered_; }
  double score() const { return p_->score(covered_, open_count_); }

  bool can_open_new_base() const {
    return !p_->frozen_bases && open_count_ < p_->max_bases;
  }

  /// Whether (j, u) can be added to the current assignment.
  bool can_place(std::size_t j, std::size_t u) const {
    return p_->site_allowed[j] && !placed(j, u) && used_[u] < p_->fleet[u] &&
           load_[j] < p_->capacity[j] && (open_[j] || can_open_new_base());
  }

  /// Calls that become covered if a u-team is added at j.
  std::int64_t add_gain(std::size_t j, std::size_t u) const;
  /// Calls that stop being covered if the u-team at j is removed.
  std::int64_t remove_loss(std::size_t j, std::size_t u) const;
  /// Demand within reach of (j, u) that is not yet covered.
  std::int64_t residual(std::size_t j, std::size_t u) const;
  /// Progress-weighted gain: each reached call short of coverage counts 1/b.
  double progress_gain(std::size_t j, std::size_t u) const;

  std::int64_t uncovered(std::size_t u) const;

  void place(std::size_t j, std::size_t u);
  /// Removes the team; the base closes when it empties unless forced open.
  void unplace(std::size_t j, std::size_t u);

  Deployment to_deployment() const;

 private:
  template <typename F>
  void for_each_covered(std::size_t j, std::size_t u, F&& f) const {
    const auto row = p_->cover->row(u, j);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }

  const Problem* p_;
  std::vector<std::uint16_t> count_;  // [u * demands + i]
  std::vector<char> placed_;
  std::vector<char> open_;
  std::vector<int> load_;
  std::vector<int> used_;
  int open_count_ = 0;
  std::int64_t covered_ = 0;
};

/// Deployment built by the greedy constructor, as a state.
SearchState run_greedy(const Problem& problem);

/// Hill climbing in place; returns the number of accepted moves.
std::size_t run_local_search(SearchState& state);

SolveResult make_result(const Problem& problem, const SearchState& state, ProofStatus proof,
                        std::uint64_t nodes, double seconds);

}  // namespace fleetic::detail
