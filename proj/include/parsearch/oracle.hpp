#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>

#include "parsearch/search_space.hpp"
#include "parsearch/types.hpp"

namespace parsearch {

/// Ground truth from exhaustive uniform-cost search.
struct OracleResult {
  /// Cheapest cost from the start to the goal region; empty if unreachable.
  std::optional<Cost> optimal_cost;
  /// Exact g* for every settled state.
  std::unordered_map<StateKey, Cost> optimal_g;

  bool reachable() const { return optimal_cost.has_value(); }
};

/// Brute-force shortest paths for verification. Deliberately independent of
/// the planner machinery: its own queue, its own expansion loop, eager
/// evaluation of every edge (with synthetic delays skipped).
///
/// With `exhaustive` every reachable state is settled; otherwise the search
/// stops once a goal state is settled. Instances above `state_budget`
/// discovered states are refused with an exception rather than silently
/// truncated.
OracleResult oracle_shortest_paths(const SearchSpace& space, StateKey start,
                                   bool exhaustive = true,
                                   std::size_t state_budget = 1000000);

}  // namespace parsearch
