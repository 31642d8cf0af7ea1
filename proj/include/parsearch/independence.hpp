#pragma once

#include "parsearch/open_list.hpp"
#include "parsearch/search_space.hpp"
#include "parsearch/shared_state.hpp"
#include "parsearch/types.hpp"

namespace parsearch {

/// Parameters of the out-of-order expansion safety check.
struct IndependenceParams {
  double epsilon = 1.0;  // independence relaxation, >= 1
  double weight = 1.0;   // heuristic inflation used in priorities, >= 1
  // When true, the OPEN scan covers every entry instead of only entries with
  // a smaller f than the candidate. Mandatory when weight > epsilon: the
  // f-order independence shortcut only holds for weight <= epsilon.
  bool full_open_scan = false;

  static IndependenceParams make(double weight, double epsilon,
                                 bool force_full_open_scan = false) {
    IndependenceParams p;
    p.weight = weight;
    p.epsilon = epsilon;
    p.full_open_scan = force_full_open_scan || weight > epsilon;
    return p;
  }
};

/// Core independence test: expanding s' cannot shorten the best known path to
/// s when g(s) - g(s') <= epsilon * h(s', s).
inline bool state_independent(Cost g_s, Cost g_s_prime, Cost h_pair, double epsilon) {
  return g_s - g_s_prime <= epsilon * h_pair;
}

/// True when `candidate` may be expanded now: its source state must be
/// independent of the source of every OPEN edge with a smaller f (every OPEN
/// edge under full_open_scan) and of every state in BE. Call with the shared
/// lock held; the candidate must still be in OPEN.
bool edge_safe_to_expand(const Edge& candidate, const EdgeSearchCore& core,
                         const SearchSpace& space, const IndependenceParams& params);

/// State-based variant of the same check, for planners whose OPEN holds
/// states rather than edges.
bool state_safe_to_expand(StateId candidate, const StateSearchCore& core,
                          const SearchSpace& space, const IndependenceParams& params);

}  // namespace parsearch
