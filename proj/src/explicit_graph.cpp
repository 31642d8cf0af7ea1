#include "parsearch/domains/explicit_graph.hpp"

#include <random>
#include <stdexcept>

#include "parsearch/busy_wait.hpp"

namespace parsearch {

ExplicitGraph::ExplicitGraph(std::size_t num_states)
    : adjacency_(num_states), goal_(num_states, 0) {}

void ExplicitGraph::add_edge(std::uint32_t from, std::uint32_t to, Cost cost) {
  if (from >= adjacency_.size() || to >= adjacency_.size()) {
    throw std::out_of_range("ExplicitGraph: node out of range");
  }
  if (cost < 0) {
    throw std::invalid_argument("ExplicitGraph: negative edge cost");
  }
  adjacency_[from].emplace_back(to, cost);
}

void ExplicitGraph::set_goal(std::uint32_t node) {
  goal_.assign(goal_.size(), 0);
  add_goal(node);
}

void ExplicitGraph::add_goal(std::uint32_t node) {
  goal_.at(node) = 1;
}

void ExplicitGraph::set_heuristic_table(std::vector<Cost> h) {
  if (h.size() != adjacency_.size()) {
    throw std::invalid_argument("ExplicitGraph: heuristic table size mismatch");
  }
  heuristic_ = std::move(h);
}

void ExplicitGraph::set_pairwise_table(std::vector<std::vector<Cost>> table) {
  if (table.size() != adjacency_.size()) {
    throw std::invalid_argument("ExplicitGraph: pairwise table size mismatch");
  }
  pairwise_ = std::move(table);
}

std::uint32_t ExplicitGraph::num_actions(StateKey state) const {
  return static_cast<std::uint32_t>(adjacency_.at(static_cast<std::size_t>(state)).size());
}

SuccessorResult ExplicitGraph::evaluate(StateKey state, ActionId action) const {
  const SuccessorResult result = evaluate_without_delay(state, action);
  if (delay_ms_ > 0) busy_wait_ms(delay_ms_);
  return result;
}

SuccessorResult ExplicitGraph::evaluate_without_delay(StateKey state, ActionId action) const {
  const auto& edges = adjacency_.at(static_cast<std::size_t>(state));
  const auto& [target, cost] = edges.at(static_cast<std::size_t>(action));
  return SuccessorResult{target, cost};
}

Cost ExplicitGraph::heuristic(StateKey state) const {
  if (heuristic_.empty()) return 0;
  return heuristic_.at(static_cast<std::size_t>(state));
}

Cost ExplicitGraph::pairwise_heuristic(StateKey from, StateKey to) const {
  if (from == to) return 0;
  if (pairwise_.empty()) return 0;
  return pairwise_.at(static_cast<std::size_t>(from)).at(static_cast<std::size_t>(to));
}

bool ExplicitGraph::is_goal(StateKey state) const {
  return goal_.at(static_cast<std::size_t>(state)) != 0;
}

ExplicitGraph random_explicit_graph(std::uint64_t seed, std::size_t n_states,
                                    double avg_degree, Cost cost_min, Cost cost_max) {
  if (n_states == 0) throw std::invalid_argument("random_explicit_graph: empty graph");
  if (avg_degree < 1) throw std::invalid_argument("random_explicit_graph: degree must be >= 1");

  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  const int max_degree = std::max(1, static_cast<int>(2 * avg_degree) - 1);
  std::uniform_int_distribution<int> degree(1, max_degree);
  std::uniform_int_distribution<std::uint32_t> node(0, static_cast<std::uint32_t>(n_states - 1));
  std::uniform_int_distribution<long long> cost(static_cast<long long>(cost_min),
                                                static_cast<long long>(cost_max));

  ExplicitGraph graph(n_states);
  for (std::uint32_t from = 0; from < n_states; ++from) {
    const int d = degree(rng);
    for (int i = 0; i < d; ++i) {
      graph.add_edge(from, node(rng), static_cast<Cost>(cost(rng)));
    }
  }
  return graph;
}

}  // namespace parsearch
