#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>

namespace parsearch {

/// Opaque, domain-defined state identifier. Domains pack whatever they need
/// (coordinates, node indices) into 64 bits; the search never interprets it.
using StateKey = std::uint64_t;

/// Dense index assigned by StateRegistry on first insertion of a StateKey.
using StateId = std::uint32_t;

using ActionId = std::int32_t;
using Cost = double;

inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::infinity();
inline constexpr StateId kInvalidStateId = std::numeric_limits<StateId>::max();

/// Reserved action id standing for all not-yet-generated real edges of a
/// state. Outside every domain's action range [0, num_actions).
inline constexpr ActionId kDummyAction = -1;

/// A (state, action) pair. The unit of work in edge-based search.
struct Edge {
  StateId source = kInvalidStateId;
  ActionId action = kDummyAction;

  bool is_dummy() const { return action == kDummyAction; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge dummy_edge(StateId source) { return Edge{source, kDummyAction}; }

struct EdgeHash {
  std::size_t operator()(const Edge& e) const {
    std::uint64_t packed = (std::uint64_t{e.source} << 32) ^
                           static_cast<std::uint32_t>(e.action);
    // splitmix64 finalizer
    packed += 0x9e3779b97f4a7c15ull;
    packed = (packed ^ (packed >> 30)) * 0xbf58476d1ce4e5b9ull;
    packed = (packed ^ (packed >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(packed ^ (packed >> 31));
  }
};

/// Lifecycle of a state. Transitions are strictly
/// kUndiscovered -> kOpenDummy -> kPartiallyExpanded -> kClosed.
enum class StateStatus : std::uint8_t {
  kUndiscovered,
  kOpenDummy,          // discovered; its dummy edge (or state entry) is in OPEN
  kPartiallyExpanded,  // in BE: some but not all outgoing edges expanded
  kClosed,             // fully expanded
};

}  // namespace parsearch
