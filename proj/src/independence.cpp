#include "parsearch/independence.hpp"

#include <unordered_set>

namespace parsearch {
namespace {

// Shared scan over OPEN and BE. SourceOf maps an open-list payload to the
// dense id of its source state.
template <typename Item, typename Hash, typename SourceOf>
bool safe_to_expand(const Item& candidate, StateId candidate_source,
                    const SearchCore<Item, Hash>& core, const SearchSpace& space,
                    const IndependenceParams& params, SourceOf source_of) {
  const StateRegistry& registry = core.registry;
  const StateRecord& cand = registry.record(candidate_source);
  const Cost cand_f = core.open.key_of(candidate).f;

  // Independence is a property of source states, so each distinct source is
  // checked once even if several of its edges are in range.
  std::unordered_set<StateId> checked;
  checked.insert(candidate_source);  // self-independence is trivial

  for (const auto& [key, item] : core.open) {
    if (!params.full_open_scan && key.f >= cand_f) break;
    if (item == candidate) continue;
    const StateId source = source_of(item);
    if (!checked.insert(source).second) continue;
    const StateRecord& other = registry.record(source);
    const Cost h_pair = space.pairwise_heuristic(other.key, cand.key);
    if (!state_independent(cand.g, other.g, h_pair, params.epsilon)) {
      return false;
    }
  }

  for (StateId source : core.be) {
    if (source == candidate_source) continue;
    if (checked.count(source) != 0) continue;
    const StateRecord& other = registry.record(source);
    const Cost h_pair = space.pairwise_heuristic(other.key, cand.key);
    if (!state_independent(cand.g, other.g, h_pair, params.epsilon)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool edge_safe_to_expand(const Edge& candidate, const EdgeSearchCore& core,
                         const SearchSpace& space, const IndependenceParams& params) {
  return safe_to_expand(candidate, candidate.source, core, space, params,
                        [](const Edge& e) { return e.source; });
}

bool state_safe_to_expand(StateId candidate, const StateSearchCore& core,
                          const SearchSpace& space, const IndependenceParams& params) {
  return safe_to_expand(candidate, candidate, core, space, params,
                        [](StateId s) { return s; });
}

}  // namespace parsearch
