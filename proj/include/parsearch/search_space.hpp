#pragma once

#include <cmath>
#include <cstdint>

#include "parsearch/types.hpp"

namespace parsearch {

/// Result of evaluating one (state, action) edge. An infinite cost means the
/// edge is invalid (collision, out of bounds, inapplicable action); the state
/// field is meaningless in that case.
struct SuccessorResult {
  StateKey state = 0;
  Cost cost = kInfiniteCost;

  bool valid() const { return std::isfinite(cost); }
};

inline SuccessorResult invalid_successor() { return {}; }

/// Domain interface.
///
/// Contract for implementors:
///  - evaluate() may be arbitrarily slow, but must be pure: the same
///    (state, action) always yields the same result, including under
///    concurrent calls from multiple threads.
///  - num_actions() is fixed per state. Actions that do not apply in a state
///    are reported as invalid by evaluate(), not skipped.
///  - heuristic() never overestimates the true cost to the goal region and is
///    consistent with respect to edge costs.
///  - pairwise_heuristic(a, b) estimates the cost from a to b. It must be
///    cheap (it is called under the planners' shared lock), side-effect free,
///    forward-backward consistent
///    (h(a,c) <= h(a,b) + h(b,c)), and zero for a == b.
class SearchSpace {
 public:
  virtual ~SearchSpace() = default;

  virtual std::uint32_t num_actions(StateKey state) const = 0;

  /// Evaluates one edge: successor state and edge cost. The expensive call.
  virtual SuccessorResult evaluate(StateKey state, ActionId action) const = 0;

  /// Same result as evaluate(), skipping any synthetic evaluation delay.
  /// Used by the oracle and by path revalidation.
  virtual SuccessorResult evaluate_without_delay(StateKey state, ActionId action) const {
    return evaluate(state, action);
  }

  virtual Cost heuristic(StateKey state) const = 0;
  virtual Cost pairwise_heuristic(StateKey from, StateKey to) const = 0;
  virtual bool is_goal(StateKey state) const = 0;
};

}  // namespace parsearch
