#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "fleetic/error.hpp"
#include "fleetic/solver.hpp"
#include "search_state.hpp"

namespace fleetic {

namespace {

using detail::Problem;
using detail::SearchState;

constexpr double kPruneEps = 1e-9;

struct Slot {
  std::size_t site;
  std::size_t type;
};

class ImplicitEnumeration {
 public:
  ImplicitEnumeration(const Problem& problem, std::optional<double> time_limit_s)
      : p_(problem),
        state_(problem),
        incumbent_(problem),
        start_(std::chrono::steady_clock::now()),
        time_limit_s_(time_limit_s) {
    open_values_.resize(p_.types);
    closed_values_.resize(p_.types);
  }

  SolveResult run() {
    // A heuristic incumbent tightens pruning from the first node on.
    incumbent_ = detail::run_greedy(p_);
    detail::run_local_search(incumbent_);
    best_ = incumbent_.score();

    order_slots();
    dfs(0);

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return detail::make_result(p_, incumbent_,
                               timed_out_ ? ProofStatus::time_limit : ProofStatus::optimal, nodes_,
                               seconds);
  }

 private:
  // Sites by descending stand-alone marginal demand, lowest index first on
  // ties; each site contributes one slot per type.
  void order_slots() {
    std::vector<std::size_t> sites;
    std::vector<std::int64_t> key(p_.sites, 0);
    for (std::size_t j = 0; j < p_.sites; ++j) {
      if (!p_.site_allowed[j]) continue;
      sites.push_back(j);
      for (std::size_t u = 0; u < p_.types; ++u) {
        if (!state_.placed(j, u)) key[j] += state_.residual(j, u);
      }
    }
    std::stable_sort(sites.begin(), sites.end(),
                     [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
    for (auto j : sites) {
      for (std::size_t u = 0; u < p_.types; ++u) {
        if (!state_.placed(j, u)) slots_.push_back({j, u});
      }
    }
  }

  // Admissible: per type, the best remaining teams each add at most their
  // site's residual demand; new sites are limited by remaining base slots.
  double bound(std::size_t k) {
    for (std::size_t u = 0; u < p_.types; ++u) {
      open_values_[u].clear();
      closed_values_[u].clear();
    }
    const bool can_open = state_.can_open_new_base();
    for (std::size_t s = k; s < slots_.size(); ++s) {
      const auto [j, u] = slots_[s];
      if (state_.used(u) >= p_.fleet[u] || state_.load_at(j) >= p_.capacity[j]) continue;
      if (state_.is_open(j)) {
        open_values_[u].push_back(state_.residual(j, u));
      } else if (can_open) {
        closed_values_[u].push_back(state_.residual(j, u));
      }
    }
    const std::size_t new_bases =
        can_open ? static_cast<std::size_t>(p_.max_bases - state_.open_count()) : 0;
    std::int64_t extra = 0;
    for (std::size_t u = 0; u < p_.types; ++u) {
      auto& open = open_values_[u];
      auto& closed = closed_values_[u];
      const std::size_t keep = std::min(new_bases, closed.size());
      std::partial_sort(closed.begin(), closed.begin() + static_cast<std::ptrdiff_t>(keep),
                        closed.end(), std::greater<>());
      open.insert(open.end(), closed.begin(), closed.begin() + static_cast<std::ptrdiff_t>(keep));
      const std::size_t teams =
          std::min(static_cast<std::size_t>(p_.fleet[u] - state_.used(u)), open.size());
      std::partial_sort(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(teams),
                        open.end(), std::greater<>());
      const std::int64_t reach = std::accumulate(
          open.begin(), open.begin() + static_cast<std::ptrdiff_t>(teams), std::int64_t{0});
      extra += std::min(reach, state_.uncovered(u));
    }
    return p_.score(state_.covered() + extra, state_.open_count());
  }

  void dfs(std::size_t k) {
    if (timed_out_) return;
    ++nodes_;
    if (time_limit_s_ && (nodes_ & 1023U) == 0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (elapsed > *time_limit_s_) {
        timed_out_ = true;
        return;
      }
    }

    const double current = state_.score();
    if (current > best_ + kPruneEps) {
      best_ = current;
      incumbent_ = state_;
    }
    if (k == slots_.size()) return;
    if (bound(k) <= best_ + kPruneEps) return;

    const auto [j, u] = slots_[k];
    if (state_.can_place(j, u)) {
      state_.place(j, u);
      dfs(k + 1);
      state_.unplace(j, u);
    }
    dfs(k + 1);
  }

  const Problem& p_;
  SearchState state_;
  SearchState incumbent_;
  double best_ = 0.0;
  std::vector<Slot> slots_;
  std::vector<std::vector<std::int64_t>> open_values_;
  std::vector<std::vector<std::int64_t>> closed_values_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  std::chrono::steady_clock::time_point start_;
  std::optional<double> time_limit_s_;
};

}  // namespace

SolveResult solve_exact(const Instance& instance, const CoverMatrix& cover,
                        const SolveOptions& options) {
  const std::size_t searched =
      options.fixed_bases ? options.fixed_bases->size() : instance.num_sites();
  if (searched > static_cast<std::size_t>(std::max(options.exact_site_limit, 0))) {
    throw GuardError("exact solver limited to " + std::to_string(options.exact_site_limit) +
                     " candidate sites, instance searches " + std::to_string(searched));
  }
  const auto problem = detail::make_problem(instance, cover, options);
  ImplicitEnumeration search(problem, options.time_limit_s);
  return search.run();
}

}  // namespace fleetic
