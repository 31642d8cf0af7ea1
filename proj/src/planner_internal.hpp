#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "parsearch/planner.hpp"
#include "parsearch/search_space.hpp"
#include "parsearch/state_registry.hpp"
#include "parsearch/types.hpp"

namespace parsearch::internal {

using Clock = std::chrono::steady_clock;

inline Clock::time_point deadline_from(Clock::time_point start, double seconds) {
  return start + std::chrono::duration_cast<Clock::duration>(
                     std::chrono::duration<double>(seconds));
}

/// Run counters shared across worker threads.
struct AtomicStats {
  std::atomic<std::uint64_t> states_expanded{0};
  std::atomic<std::uint64_t> edges_evaluated{0};
  std::atomic<std::uint64_t> dummy_expansions{0};
  std::atomic<std::uint64_t> threads_spawned{0};
  std::atomic<std::uint64_t> blocked_g_decreases{0};

  RunStats snapshot() const {
    RunStats s;
    s.states_expanded = states_expanded.load();
    s.edges_evaluated = edges_evaluated.load();
    s.dummy_expansions = dummy_expansions.load();
    s.threads_spawned = threads_spawned.load();
    s.blocked_g_decreases = blocked_g_decreases.load();
    return s;
  }
};

/// Sizes a record's action bookkeeping the first time its edges are needed.
/// Requires the shared lock in concurrent planners.
inline void ensure_actions_known(StateRecord& rec, const SearchSpace& space,
                                 bool debug_checks) {
  if (rec.num_actions_known) return;
  rec.num_actions = space.num_actions(rec.key);
  rec.num_actions_known = true;
  if (debug_checks && rec.num_actions > 0) {
    rec.evaluated_mask = std::make_unique<std::atomic<std::uint8_t>[]>(rec.num_actions);
    for (std::uint32_t i = 0; i < rec.num_actions; ++i) {
      rec.evaluated_mask[i].store(0, std::memory_order_relaxed);
    }
  }
}

/// Marks a real edge as scheduled for evaluation; aborts the run if it was
/// already evaluated. Safe to call concurrently for distinct actions.
inline void claim_evaluation(StateRecord& rec, ActionId action, bool debug_checks) {
  if (!debug_checks || !rec.evaluated_mask) return;
  if (action < 0 || static_cast<std::uint32_t>(action) >= rec.num_actions) {
    throw std::logic_error("claim_evaluation: action out of range");
  }
  if (rec.evaluated_mask[action].exchange(1, std::memory_order_acq_rel) != 0) {
    throw std::logic_error("duplicate edge evaluation detected");
  }
}

/// The single call site for domain edge evaluation. Every planner routes real
/// edges through here so the evaluation count is exact.
inline SuccessorResult evaluate_edge(const SearchSpace& space, StateKey source,
                                     ActionId action, AtomicStats& stats) {
  stats.edges_evaluated.fetch_add(1, std::memory_order_relaxed);
  return space.evaluate(source, action);
}

/// Follows parent edges from `goal_id` back to the start and returns the path
/// in forward order. The forward sum of stored edge costs reproduces g.
std::vector<PathEdge> backtrack(const StateRegistry& registry, StateId goal_id);

void validate_config(const PlannerConfig& config);

// Per-algorithm entry points.
SearchResult plan_astar(const SearchSpace& space, StateKey start, const PlannerConfig& config);
SearchResult plan_eastar(const SearchSpace& space, StateKey start, const PlannerConfig& config);
SearchResult plan_pwastar(const SearchSpace& space, StateKey start, const PlannerConfig& config);
SearchResult plan_wpase(const SearchSpace& space, StateKey start, const PlannerConfig& config);
SearchResult plan_epase(const SearchSpace& space, StateKey start, const PlannerConfig& config);

}  // namespace parsearch::internal
