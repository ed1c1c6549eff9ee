#include <chrono>
#include <vector>

#include "fleetic/solver.hpp"
#include "search_state.hpp"

namespace fleetic {

namespace detail {

namespace {

constexpr double kImprovementEps = 1e-9;

double placement_gain(const SearchState& state, std::size_t j, std::size_t u) {
  const Problem& p = state.problem();
  const double coverage = p.required[u] == 1 ? static_cast<double>(state.add_gain(j, u))
                                             : state.progress_gain(j, u);
  return p.coverage_weight() * coverage - (state.is_open(j) ? 0.0 : p.base_cost());
}

}  // namespace

SearchState run_greedy(const Problem& problem) {
  SearchState state(problem);
  for (;;) {
    double best_gain = kImprovementEps;
    std::size_t best_site = problem.sites;
    std::size_t best_type = 0;
    for (std::size_t j = 0; j < problem.sites; ++j) {
      for (std::size_t u = 0; u < problem.types; ++u) {
        if (!state.can_place(j, u)) continue;
        const double gain = placement_gain(state, j, u);
        if (gain > best_gain) {
          best_gain = gain;
          best_site = j;
          best_type = u;
        }
      }
    }
    if (best_site == problem.sites) break;
    state.place(best_site, best_type);
  }
  return state;
}

std::size_t run_local_search(SearchState& state) {
  const Problem& p = state.problem();
  std::size_t accepted = 0;
  std::vector<std::size_t> moved;

  enum class Move { none, relocate, swap_base };
  for (;;) {
    const double current = state.score();
    // Moves that lose calls are never taken, even when the weighted score
    // would pay for a closed base.
    const std::int64_t floor_covered = state.covered();
    double best = current + kImprovementEps;
    Move best_move = Move::none;
    std::size_t best_from = 0;
    std::size_t best_type = 0;
    std::size_t best_to = 0;

    // Relocate one team to another slot of the same type.
    for (std::size_t j = 0; j < p.sites; ++j) {
      for (std::size_t u = 0; u < p.types; ++u) {
        if (!state.placed(j, u) || state.locked(j, u)) continue;
        state.unplace(j, u);
        for (std::size_t to = 0; to < p.sites; ++to) {
          if (to == j || !state.can_place(to, u)) continue;
          state.place(to, u);
          const double s = state.score();
          if (s > best && state.covered() >= floor_covered) {
            best = s;
            best_move = Move::relocate;
            best_from = j;
            best_type = u;
            best_to = to;
          }
          state.unplace(to, u);
        }
        state.place(j, u);
      }
    }

    // Move a whole base, with every team on it, to a closed site.
    if (!p.frozen_bases) {
      for (std::size_t j = 0; j < p.sites; ++j) {
        if (!state.is_open(j) || state.load_at(j) == 0 || p.forced_open[j]) continue;
        moved.clear();
        bool has_locked = false;
        for (std::size_t u = 0; u < p.types; ++u) {
          if (state.placed(j, u)) {
            moved.push_back(u);
            has_locked = has_locked || state.locked(j, u);
          }
        }
        if (has_locked) continue;
        for (auto u : moved) state.unplace(j, u);
        for (std::size_t to = 0; to < p.sites; ++to) {
          if (to == j || state.is_open(to) || !p.site_allowed[to] ||
              p.capacity[to] < static_cast<int>(moved.size()) || !state.can_open_new_base()) {
            continue;
          }
          for (auto u : moved) state.place(to, u);
          const double s = state.score();
          if (s > best && state.covered() >= floor_covered) {
            best = s;
            best_move = Move::swap_base;
            best_from = j;
            best_to = to;
          }
          for (auto u : moved) state.unplace(to, u);
        }
        for (auto u : moved) state.place(j, u);
      }
    }

    if (best_move == Move::none) break;
    if (best_move == Move::relocate) {
      state.unplace(best_from, best_type);
      state.place(best_to, best_type);
    } else {
      moved.clear();
      for (std::size_t u = 0; u < p.types; ++u) {
        if (state.placed(best_from, u)) moved.push_back(u);
      }
      for (auto u : moved) state.unplace(best_from, u);
      for (auto u : moved) state.place(best_to, u);
    }
    ++accepted;
  }
  return accepted;
}

}  // namespace detail

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SolveResult solve_greedy(const Instance& instance, const CoverMatrix& cover,
                         const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto problem = detail::make_problem(instance, cover, options);
  const auto state = detail::run_greedy(problem);
  return detail::make_result(problem, state, ProofStatus::heuristic, 0, seconds_since(start));
}

Deployment improve_local_search(const Instance& instance, const CoverMatrix& cover,
                                const Deployment& deployment, const SolveOptions& options) {
  const auto problem = detail::make_problem(instance, cover, options);
  detail::SearchState state(problem);
  state.load(deployment);
  detail::run_local_search(state);
  return state.to_deployment();
}

SolveResult solve(const Instance& instance, const CoverMatrix& cover,
                  const SolveOptions& options) {
  switch (options.mode) {
    case SolveMode::exact:
      return solve_exact(instance, cover, options);
    case SolveMode::greedy:
      return solve_greedy(instance, cover, options);
    case SolveMode::greedy_local_search: {
      const auto start = std::chrono::steady_clock::now();
      const auto problem = detail::make_problem(instance, cover, options);
      auto state = detail::run_greedy(problem);
      const auto moves = detail::run_local_search(state);
      return detail::make_result(problem, state, ProofStatus::heuristic, moves,
                                 seconds_since(start));
    }
  }
  return solve_exact(instance, cover, options);
}

}  // namespace fleetic
