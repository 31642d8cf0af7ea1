#include "parsearch/planner.hpp"

#include <algorithm>
#include <stdexcept>

#include "planner_internal.hpp"

namespace parsearch {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kAStar: return "astar";
    case Algorithm::kWAStar: return "wastar";
    case Algorithm::kEAStar: return "eastar";
    case Algorithm::kPWAStar: return "pwastar";
    case Algorithm::kWPASE: return "wpase";
    case Algorithm::kEPASE: return "epase";
  }
  return "unknown";
}

bool algorithm_from_name(const std::string& name, Algorithm* out) {
  static const std::pair<const char*, Algorithm> table[] = {
      {"astar", Algorithm::kAStar},   {"wastar", Algorithm::kWAStar},
      {"eastar", Algorithm::kEAStar}, {"pwastar", Algorithm::kPWAStar},
      {"wpase", Algorithm::kWPASE},   {"epase", Algorithm::kEPASE},
  };
  for (const auto& [n, a] : table) {
    if (name == n) {
      *out = a;
      return true;
    }
  }
  return false;
}

bool algorithm_is_serial(Algorithm a) {
  return a == Algorithm::kAStar || a == Algorithm::kWAStar || a == Algorithm::kEAStar;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kSolved: return "SOLVED";
    case Outcome::kNoSolution: return "NO_SOLUTION";
    case Outcome::kTimeout: return "TIMEOUT";
  }
  return "unknown";
}

bool outcome_from_name(const std::string& name, Outcome* out) {
  if (name == "SOLVED") *out = Outcome::kSolved;
  else if (name == "NO_SOLUTION") *out = Outcome::kNoSolution;
  else if (name == "TIMEOUT") *out = Outcome::kTimeout;
  else return false;
  return true;
}

SearchResult plan(const SearchSpace& space, StateKey start, const PlannerConfig& config) {
  internal::validate_config(config);
  switch (config.algorithm) {
    case Algorithm::kAStar:
    case Algorithm::kWAStar:
      return internal::plan_astar(space, start, config);
    case Algorithm::kEAStar:
      return internal::plan_eastar(space, start, config);
    case Algorithm::kPWAStar:
      return internal::plan_pwastar(space, start, config);
    case Algorithm::kWPASE:
      return internal::plan_wpase(space, start, config);
    case Algorithm::kEPASE:
      return internal::plan_epase(space, start, config);
  }
  throw std::invalid_argument("plan: unknown algorithm");
}

namespace internal {

void validate_config(const PlannerConfig& config) {
  if (config.weight < 1.0) throw std::invalid_argument("config: weight must be >= 1");
  if (config.epsilon < 1.0) throw std::invalid_argument("config: epsilon must be >= 1");
  if (config.num_threads < 1) throw std::invalid_argument("config: num_threads must be >= 1");
  if (config.time_limit_s <= 0) throw std::invalid_argument("config: time limit must be positive");
  if (config.algorithm == Algorithm::kAStar && config.weight != 1.0) {
    throw std::invalid_argument("config: astar requires weight == 1");
  }
}

std::vector<PathEdge> backtrack(const StateRegistry& registry, StateId goal_id) {
  const StateRecord* rec = &registry.record(goal_id);
  if (!std::isfinite(rec->g)) {
    throw std::logic_error("backtrack: goal state has no finite g");
  }
  std::vector<PathEdge> path;
  Cost remaining = rec->g;
  while (rec->parent.valid()) {
    const StateRecord& parent = registry.record(rec->parent.parent);
    path.push_back(PathEdge{parent.key, rec->parent.action, rec->parent.cost});
    remaining -= rec->parent.cost;
    if (parent.g + rec->parent.cost != rec->g) {
      throw std::logic_error("backtrack: parent chain is inconsistent");
    }
    rec = &parent;
  }
  if (rec->g != 0 || remaining != 0) {
    throw std::logic_error("backtrack: chain does not reach the start state");
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace internal
}  // namespace parsearch
