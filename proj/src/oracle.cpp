#include "parsearch/oracle.hpp"

#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

namespace parsearch {

OracleResult oracle_shortest_paths(const SearchSpace& space, StateKey start,
                                   bool exhaustive, std::size_t state_budget) {
  OracleResult result;

  using Entry = std::pair<Cost, StateKey>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  std::unordered_map<StateKey, Cost> dist;
  std::unordered_set<StateKey> settled;

  dist[start] = 0;
  queue.push({0, start});

  while (!queue.empty()) {
    const auto [d, state] = queue.top();
    queue.pop();
    if (d != dist.at(state)) continue;  // stale entry
    if (!settled.insert(state).second) continue;

    result.optimal_g[state] = d;
    if (space.is_goal(state)) {
      if (!result.optimal_cost || d < *result.optimal_cost) result.optimal_cost = d;
      if (!exhaustive) return result;
    }

    const std::uint32_t n = space.num_actions(state);
    for (ActionId a = 0; a < static_cast<ActionId>(n); ++a) {
      const SuccessorResult succ = space.evaluate_without_delay(state, a);
      if (!succ.valid()) continue;
      const Cost nd = d + succ.cost;
      auto [it, inserted] = dist.try_emplace(succ.state, nd);
      if (inserted && dist.size() > state_budget) {
        throw std::runtime_error("oracle_shortest_paths: state budget exceeded");
      }
      if (!inserted) {
        if (it->second <= nd) continue;
        it->second = nd;
      }
      queue.push({nd, succ.state});
    }
  }

  return result;
}

}  // namespace parsearch
