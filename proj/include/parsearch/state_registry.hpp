#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "parsearch/types.hpp"

namespace parsearch {

/// Back-pointer stored when a state's g-value is set or improved.
struct ParentEdge {
  StateId parent = kInvalidStateId;
  ActionId action = kDummyAction;
  Cost cost = 0;

  bool valid() const { return parent != kInvalidStateId; }
};

/// Per-state search bookkeeping.
struct StateRecord {
  StateKey key = 0;
  Cost g = kInfiniteCost;
  Cost h = 0;
  ParentEdge parent{};
  std::uint32_t n_successors_generated = 0;
  // Action count, filled in when the state's edges are first generated.
  std::uint32_t num_actions = 0;
  bool num_actions_known = false;
  StateStatus status = StateStatus::kUndiscovered;
  // One flag per action; set when the edge is evaluated. Used to fail fast on
  // duplicate evaluations. Allocated together with num_actions.
  std::unique_ptr<std::atomic<std::uint8_t>[]> evaluated_mask;

  bool discovered() const { return status != StateStatus::kUndiscovered; }
};

/// Interns StateKeys to dense StateIds and owns the per-state records.
/// Records live in a deque so references stay valid as states are added.
class StateRegistry {
 public:
  /// Returns the id of an existing record, or creates a fresh one with
  /// g = +inf, status kUndiscovered and the given cached heuristic.
  StateId get_or_insert(StateKey key, Cost h) {
    auto [it, inserted] = index_.try_emplace(key, static_cast<StateId>(records_.size()));
    if (inserted) {
      StateRecord& rec = records_.emplace_back();
      rec.key = key;
      rec.h = h;
    }
    return it->second;
  }

  /// Id of a key that must already be interned.
  StateId id_of(StateKey key) const {
    auto it = index_.find(key);
    if (it == index_.end()) {
      throw std::logic_error("StateRegistry: unknown key");
    }
    return it->second;
  }

  bool contains(StateKey key) const { return index_.count(key) != 0; }

  StateRecord& record(StateId id) { return records_.at(id); }
  const StateRecord& record(StateId id) const { return records_.at(id); }

  std::size_t size() const { return records_.size(); }

 private:
  std::unordered_map<StateKey, StateId> index_;
  std::deque<StateRecord> records_;
};

}  // namespace parsearch
