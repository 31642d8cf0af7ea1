#include <chrono>

#include "parsearch/open_list.hpp"
#include "parsearch/planner.hpp"
#include "parsearch/state_registry.hpp"
#include "planner_internal.hpp"

namespace parsearch::internal {

namespace {

SearchResult finish(SearchResult result, AtomicStats& stats, std::uint64_t max_open,
                    Clock::time_point start_time) {
  result.stats = stats.snapshot();
  result.stats.max_open_size = max_open;
  result.stats.wall_time_s =
      std::chrono::duration<double>(Clock::now() - start_time).count();
  return result;
}

}  // namespace

// Serial A* / weighted A*. States are expanded in f = g + w*h order; each
// expansion evaluates every outgoing edge of the state.
SearchResult plan_astar(const SearchSpace& space, StateKey start, const PlannerConfig& config) {
  const auto t0 = Clock::now();
  const auto deadline = deadline_from(t0, config.time_limit_s);
  const double w = config.weight;

  StateRegistry registry;
  OpenList<StateId> open;
  AtomicStats stats;
  SearchResult result;

  const StateId start_id = registry.get_or_insert(start, space.heuristic(start));
  {
    StateRecord& rec = registry.record(start_id);
    rec.g = 0;
    rec.status = StateStatus::kOpenDummy;
    open.insert_or_reposition(start_id, w * rec.h, 0);
  }

  while (true) {
    if (Clock::now() > deadline) {
      result.outcome = Outcome::kTimeout;
      break;
    }
    if (open.empty()) {
      result.outcome = Outcome::kNoSolution;
      break;
    }

    const StateId sid = open.pop_min().second;
    StateRecord& rec = registry.record(sid);
    if (config.record_selection_log) {
      result.selection_log.push_back({rec.key, rec.g});
    }
    if (space.is_goal(rec.key)) {
      result.outcome = Outcome::kSolved;
      result.cost = rec.g;
      result.path = backtrack(registry, sid);
      break;
    }

    rec.status = StateStatus::kPartiallyExpanded;
    ensure_actions_known(rec, space, config.debug_checks);
    for (ActionId a = 0; a < static_cast<ActionId>(rec.num_actions); ++a) {
      claim_evaluation(rec, a, config.debug_checks);
      const SuccessorResult succ = evaluate_edge(space, rec.key, a, stats);
      ++rec.n_successors_generated;
      if (!succ.valid()) continue;

      const StateId tid = registry.contains(succ.state)
                              ? registry.id_of(succ.state)
                              : registry.get_or_insert(succ.state, space.heuristic(succ.state));
      StateRecord& target = registry.record(tid);
      const Cost g_new = rec.g + succ.cost;
      if (target.g <= g_new) continue;
      if (target.status == StateStatus::kClosed ||
          target.status == StateStatus::kPartiallyExpanded) {
        stats.blocked_g_decreases.fetch_add(1, std::memory_order_relaxed);
        continue;
      }
      target.g = g_new;
      target.parent = ParentEdge{sid, a, succ.cost};
      target.status = StateStatus::kOpenDummy;
      open.insert_or_reposition(tid, g_new + w * target.h, g_new);
    }
    rec.status = StateStatus::kClosed;
    stats.states_expanded.fetch_add(1, std::memory_order_relaxed);
  }

  return finish(std::move(result), stats, open.max_size_seen(), t0);
}

// Serial edge-based (w)A*. OPEN holds edges; a state's real edges enter OPEN
// only when its dummy edge is expanded, and are evaluated one at a time in
// best-first order. A state closes when all its edges have been evaluated.
SearchResult plan_eastar(const SearchSpace& space, StateKey start, const PlannerConfig& config) {
  const auto t0 = Clock::now();
  const auto deadline = deadline_from(t0, config.time_limit_s);
  const double w = config.weight;

  StateRegistry registry;
  OpenList<Edge, EdgeHash> open;
  AtomicStats stats;
  SearchResult result;

  const StateId start_id = registry.get_or_insert(start, space.heuristic(start));
  {
    StateRecord& rec = registry.record(start_id);
    rec.g = 0;
    rec.status = StateStatus::kOpenDummy;
    open.insert_or_reposition(dummy_edge(start_id), w * rec.h, 0);
  }

  while (true) {
    if (Clock::now() > deadline) {
      result.outcome = Outcome::kTimeout;
      break;
    }
    if (open.empty()) {
      // A partially expanded state always has its remaining edges in OPEN,
      // so an empty OPEN means the whole reachable space is exhausted.
      result.outcome = Outcome::kNoSolution;
      break;
    }

    const Edge edge = open.pop_min().second;
    StateRecord& rec = registry.record(edge.source);
    if (config.record_selection_log) {
      result.selection_log.push_back({rec.key, rec.g});
    }
    if (space.is_goal(rec.key)) {
      result.outcome = Outcome::kSolved;
      result.cost = rec.g;
      result.path = backtrack(registry, edge.source);
      break;
    }

    if (edge.is_dummy()) {
      rec.status = StateStatus::kPartiallyExpanded;
      ensure_actions_known(rec, space, config.debug_checks);
      stats.dummy_expansions.fetch_add(1, std::memory_order_relaxed);
      for (ActionId a = 0; a < static_cast<ActionId>(rec.num_actions); ++a) {
        open.insert_or_reposition(Edge{edge.source, a}, rec.g + w * rec.h, rec.g);
      }
      if (rec.num_actions == 0) {
        rec.status = StateStatus::kClosed;
        stats.states_expanded.fetch_add(1, std::memory_order_relaxed);
      }
    } else {
      claim_evaluation(rec, edge.action, config.debug_checks);
      const SuccessorResult succ = evaluate_edge(space, rec.key, edge.action, stats);
      if (succ.valid()) {
        const StateId tid = registry.contains(succ.state)
                                ? registry.id_of(succ.state)
                                : registry.get_or_insert(succ.state, space.heuristic(succ.state));
        StateRecord& target = registry.record(tid);
        const Cost g_new = rec.g + succ.cost;
        if (target.g > g_new) {
          if (target.status == StateStatus::kClosed ||
              target.status == StateStatus::kPartiallyExpanded) {
            stats.blocked_g_decreases.fetch_add(1, std::memory_order_relaxed);
          } else {
            target.g = g_new;
            target.parent = ParentEdge{edge.source, edge.action, succ.cost};
            target.status = StateStatus::kOpenDummy;
            open.insert_or_reposition(dummy_edge(tid), g_new + w * target.h, g_new);
          }
        }
      }
      ++rec.n_successors_generated;
      if (rec.n_successors_generated == rec.num_actions) {
        rec.status = StateStatus::kClosed;
        stats.states_expanded.fetch_add(1, std::memory_order_relaxed);
      }
    }
  }

  return finish(std::move(result), stats, open.max_size_seen(), t0);
}

}  // namespace parsearch::internal
