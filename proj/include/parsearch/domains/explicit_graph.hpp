#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "parsearch/search_space.hpp"
#include "parsearch/types.hpp"

namespace parsearch {

/// Explicit directed graph domain for oracle-style testing. States are node
/// indices; the actions of a node are indices into its adjacency list.
/// Heuristic and pairwise-heuristic tables are optional and default to zero
/// (always admissible, maximally conservative for independence checks).
class ExplicitGraph : public SearchSpace {
 public:
  explicit ExplicitGraph(std::size_t num_states);

  void add_edge(std::uint32_t from, std::uint32_t to, Cost cost);
  void set_goal(std::uint32_t node);
  void add_goal(std::uint32_t node);
  /// h[s]; must be admissible and consistent for optimality guarantees.
  void set_heuristic_table(std::vector<Cost> h);
  /// h_pair[from][to]; must be forward-backward consistent with zero diagonal.
  void set_pairwise_table(std::vector<std::vector<Cost>> table);
  /// Synthetic per-evaluation expense, as in the grid domain.
  void set_evaluation_delay_ms(double ms) { delay_ms_ = ms; }

  std::size_t num_states() const { return adjacency_.size(); }

  std::uint32_t num_actions(StateKey state) const override;
  SuccessorResult evaluate(StateKey state, ActionId action) const override;
  SuccessorResult evaluate_without_delay(StateKey state, ActionId action) const override;
  Cost heuristic(StateKey state) const override;
  Cost pairwise_heuristic(StateKey from, StateKey to) const override;
  bool is_goal(StateKey state) const override;

 private:
  std::vector<std::vector<std::pair<std::uint32_t, Cost>>> adjacency_;
  std::vector<std::uint8_t> goal_;
  std::vector<Cost> heuristic_;
  std::vector<std::vector<Cost>> pairwise_;
  double delay_ms_ = 0;
};

/// Deterministic random graph: every node gets between 1 and 2*avg_degree-1
/// outgoing edges with integer costs in [cost_min, cost_max].
ExplicitGraph random_explicit_graph(std::uint64_t seed, std::size_t n_states,
                                    double avg_degree, Cost cost_min, Cost cost_max);

}  // namespace parsearch
