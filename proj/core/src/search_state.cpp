#include "search_state.hpp"

#include <algorithm>

#include "fleetic/error.hpp"

namespace fleetic {

std::string to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::exact:
      return "exact";
    case SolveMode::greedy:
      return "greedy";
    case SolveMode::greedy_local_search:
      return "greedy+local-search";
  }
  return "unknown";
}

std::string to_string(ProofStatus proof) {
  switch (proof) {
    case ProofStatus::optimal:
      return "optimal";
    case ProofStatus::heuristic:
      return "heuristic";
    case ProofStatus::time_limit:
      return "time-limit";
  }
  return "unknown";
}

SolveMode parse_solve_mode(const std::string& text) {
  if (text == "exact") return SolveMode::exact;
  if (text == "greedy") return SolveMode::greedy;
  if (text == "greedy+local-search" || text == "greedy+ls" || text == "local-search") {
    return SolveMode::greedy_local_search;
  }
  throw ValidationError("unknown solve mode '" + text + "'");
}

ProofStatus parse_proof_status(const std::string& text) {
  if (text == "optimal") return ProofStatus::optimal;
  if (text == "heuristic") return ProofStatus::heuristic;
  if (text == "time-limit") return ProofStatus::time_limit;
  throw ValidationError("unknown proof status '" + text + "'");
}

}  // namespace fleetic

namespace fleetic::detail {

Problem make_problem(const Instance& instance, const CoverMatrix& cover,
                     const SolveOptions& options) {
  Problem p;
  p.instance = &instance;
  p.cover = &cover;
  p.types = instance.num_types();
  p.sites = instance.num_sites();
  p.demands = instance.num_demands();
  if (cover.num_types() != p.types || cover.num_sites() != p.sites ||
      cover.num_demands() != p.demands) {
    throw ValidationError("cover matrix does not match the instance dimensions");
  }

  p.required.assign(p.types, 1);
  for (const auto& [type, b] : options.required_teams) {
    auto u = instance.type_index(type);
    if (!u) throw ValidationError("coverage requirement names unknown team type '" + type + "'");
    if (b < 1) throw ValidationError("required teams for type '" + type + "' must be >= 1");
    p.required[*u] = b;
  }
  for (const auto& t : instance.team_types()) p.fleet.push_back(t.fleet_size);
  for (const auto& s : instance.sites()) p.capacity.push_back(s.capacity);
  p.q.assign(p.types * p.demands, 0);
  for (std::size_t u = 0; u < p.types; ++u) {
    for (std::size_t i = 0; i < p.demands; ++i) p.q[u * p.demands + i] = instance.demand(i, u);
  }
  p.total_demand = total_demand(instance);
  p.max_bases = instance.max_bases();

  if (options.lambda) {
    if (!(*options.lambda >= 0.0 && *options.lambda <= 1.0)) {
      throw ValidationError("lambda must lie in [0, 1]");
    }
    if (p.total_demand == 0) {
      throw ValidationError("weighted-sum objective is undefined when total demand is zero");
    }
    p.lambda = options.lambda;
  }

  p.site_allowed.assign(p.sites, 1);
  p.forced_open.assign(p.sites, 0);
  p.locked.assign(p.sites * p.types, 0);

  if (options.fixed_bases) {
    p.frozen_bases = true;
    std::fill(p.site_allowed.begin(), p.site_allowed.end(), 0);
    for (const auto& id : *options.fixed_bases) {
      auto j = instance.site_index(id);
      if (!j) throw ValidationError("fixed base names unknown site '" + id + "'");
      p.site_allowed[*j] = 1;
      p.forced_open[*j] = 1;
    }
    if (options.fixed_bases->size() > static_cast<std::size_t>(p.max_bases)) {
      throw ValidationError("fixed bases exceed max_bases");
    }
  }

  std::vector<int> per_type(p.types, 0);
  std::vector<int> per_site(p.sites, 0);
  std::vector<char> opened = p.forced_open;
  for (const auto& pl : options.fixed_placements) {
    auto j = instance.site_index(pl.site);
    auto u = instance.type_index(pl.type);
    if (!j) throw ValidationError("fixed placement names unknown site '" + pl.site + "'");
    if (!u) throw ValidationError("fixed placement names unknown team type '" + pl.type + "'");
    if (!p.site_allowed[*j]) {
      throw ValidationError("fixed placement at '" + pl.site + "' lies outside the fixed bases");
    }
    p.locked[*j * p.types + *u] = 1;
    opened[*j] = 1;
    if (++per_type[*u] > p.fleet[*u]) {
      throw GuardError("fixed placements exceed the fleet of type '" + pl.type + "'");
    }
    if (++per_site[*j] > p.capacity[*j]) {
      throw GuardError("fixed placements exceed the capacity of site '" + pl.site + "'");
    }
  }
  if (std::count(opened.begin(), opened.end(), 1) > p.max_bases) {
    throw GuardError("fixed placements and bases need more than max_bases bases");
  }
  return p;
}

SearchState::SearchState(const Problem& problem)
    : p_(&problem),
      count_(problem.types * problem.demands, 0),
      placed_(problem.sites * problem.types, 0),
      open_(problem.sites, 0),
      load_(problem.sites, 0),
      used_(problem.types, 0) {
  for (std::size_t j = 0; j < p_->sites; ++j) {
    if (p_->forced_open[j]) {
      open_[j] = 1;
      ++open_count_;
    }
  }
  for (std::size_t j = 0; j < p_->sites; ++j) {
    for (std::size_t u = 0; u < p_->types; ++u) {
      if (locked(j, u)) place(j, u);
    }
  }
}

void SearchState::load(const Deployment& deployment) {
  const Instance& inst = *p_->instance;
  check_deployment(inst, deployment);
  for (std::size_t j = 0; j < p_->sites; ++j) {
    for (std::size_t u = 0; u < p_->types; ++u) {
      if (locked(j, u) &&
          !deployment.placements.contains({inst.sites()[j].id, inst.team_types()[u].id})) {
        throw ValidationError("deployment is missing fixed placement (" + inst.sites()[j].id +
                              ", " + inst.team_types()[u].id + ")");
      }
    }
  }
  for (const auto& id : deployment.open_bases) {
    const std::size_t j = *inst.site_index(id);
    if (p_->frozen_bases && !p_->forced_open[j]) {
      throw ValidationError("deployment opens '" + id + "' outside the fixed base set");
    }
    if (!open_[j]) {
      open_[j] = 1;
      ++open_count_;
    }
  }
  if (open_count_ > p_->max_bases) throw ValidationError("deployment exceeds max_bases");
  for (const auto& pl : deployment.placements) {
    const std::size_t j = *inst.site_index(pl.site);
    const std::size_t u = *inst.type_index(pl.type);
    if (!placed(j, u)) place(j, u);
  }
}

std::int64_t SearchState::add_gain(std::size_t j, std::size_t u) const {
  const std::uint16_t threshold = static_cast<std::uint16_t>(p_->required[u] - 1);
  const std::size_t base = u * p_->demands;
  std::int64_t gain = 0;
  for_each_covered(j, u, [&](std::size_t i) {
    if (count_[base + i] == threshold) gain += p_->q[base + i];
  });
  return gain;
}

std::int64_t SearchState::remove_loss(std::size_t j, std::size_t u) const {
  const std::uint16_t threshold = static_cast<std::uint16_t>(p_->required[u]);
  const std::size_t base = u * p_->demands;
  std::int64_t loss = 0;
  for_each_covered(j, u, [&](std::size_t i) {
    if (count_[base + i] == threshold) loss += p_->q[base + i];
  });
  return loss;
}

std::int64_t SearchState::residual(std::size_t j, std::size_t u) const {
  const int b = p_->required[u];
  const std::size_t base = u * p_->demands;
  std::int64_t total = 0;
  for_each_covered(j, u, [&](std::size_t i) {
    if (count_[base + i] < b) total += p_->q[base + i];
  });
  return total;
}

double SearchState::progress_gain(std::size_t j, std::size_t u) const {
  return static_cast<double>(residual(j, u)) / p_->required[u];
}

std::int64_t SearchState::uncovered(std::size_t u) const {
  const int b = p_->required[u];
  const std::size_t base = u * p_->demands;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < p_->demands; ++i) {
    if (count_[base + i] < b) total += p_->q[base + i];
  }
  return total;
}

void SearchState::place(std::size_t j, std::size_t u) {
  if (!open_[j]) {
    open_[j] = 1;
    ++open_count_;
  }
  placed_[j * p_->types + u] = 1;
  ++load_[j];
  ++used_[u];
  const int b = p_->required[u];
  const std::size_t base = u * p_->demands;
  for_each_covered(j, u, [&](std::size_t i) {
    if (++count_[base + i] == b) covered_ += p_->q[base + i];
  });
}

void SearchState::unplace(std::size_t j, std::size_t u) {
  const int b = p_->required[u];
  const std::size_t base = u * p_->demands;
  for_each_covered(j, u, [&](std::size_t i) {
    if (count_[base + i]-- == b) covered_ -= p_->q[base + i];
  });
  placed_[j * p_->types + u] = 0;
  --load_[j];
  --used_[u];
  if (load_[j] == 0 && !p_->forced_open[j]) {
    open_[j] = 0;
    --open_count_;
  }
}

Deployment SearchState::to_deployment() const {
  const Instance& inst = *p_->instance;
  Deployment out;
  for (std::size_t j = 0; j < p_->sites; ++j) {
    if (open_[j]) out.open_bases.insert(inst.sites()[j].id);
    for (std::size_t u = 0; u < p_->types; ++u) {
      if (placed(j, u)) out.placements.insert({inst.sites()[j].id, inst.team_types()[u].id});
    }
  }
  return out;
}

SolveResult make_result(const Problem& problem, const SearchState& state, ProofStatus proof,
                        std::uint64_t nodes, double seconds) {
  SolveResult result;
  result.deployment = state.to_deployment();
  result.report =
      evaluate_deployment(*problem.instance, *problem.cover, result.deployment, problem.required);
  result.proof = proof;
  result.explored_nodes = nodes;
  result.wall_time_s = seconds;
  result.objective = state.score();
  return result;
}

}  // namespace fleetic::detail
