#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "parsearch/types.hpp"

namespace parsearch {

/// Priority of an OPEN entry: ordered by f, ties broken by larger g (prefer
/// deeper states), then by insertion sequence (FIFO).
struct PriorityKey {
  Cost f = 0;
  Cost g = 0;
  std::uint64_t seq = 0;

  friend bool operator<(const PriorityKey& a, const PriorityKey& b) {
    if (a.f != b.f) return a.f < b.f;
    if (a.g != b.g) return a.g > b.g;
    return a.seq < b.seq;
  }
  friend bool operator==(const PriorityKey& a, const PriorityKey& b) = default;
};

/// Ordered open list with decrease-key and in-order traversal.
///
/// Backed by a balanced tree rather than a binary heap: the independence scan
/// has to walk every entry below a candidate's key, which a heap cannot do
/// without destructive pops. Each entry gets a fresh sequence number on
/// insertion or reposition, so tree keys are unique.
template <typename Item, typename Hash = std::hash<Item>>
class OpenList {
 public:
  using QueueMap = std::map<PriorityKey, Item>;
  using const_iterator = typename QueueMap::const_iterator;

  /// Inserts the item, or repositions it if already present. Repositioning to
  /// a strictly larger f is rejected: f only ever decreases for a live entry
  /// (g is non-increasing and h fixed), so an increase means corrupted state.
  void insert_or_reposition(const Item& item, Cost f, Cost g) {
    auto it = index_.find(item);
    if (it != index_.end()) {
      if (f > it->second.f) {
        throw std::logic_error("OpenList: reposition to a larger f");
      }
      queue_.erase(it->second);
      index_.erase(it);
    }
    PriorityKey key{f, g, next_seq_++};
    queue_.emplace(key, item);
    index_.emplace(item, key);
    if (queue_.size() > max_size_) max_size_ = queue_.size();
  }

  /// Removes an item that must be present.
  void remove(const Item& item) {
    auto it = index_.find(item);
    if (it == index_.end()) {
      throw std::logic_error("OpenList: removing an absent item");
    }
    queue_.erase(it->second);
    index_.erase(it);
  }

  bool contains(const Item& item) const { return index_.count(item) != 0; }

  const PriorityKey& key_of(const Item& item) const {
    auto it = index_.find(item);
    if (it == index_.end()) {
      throw std::logic_error("OpenList: key_of on an absent item");
    }
    return it->second;
  }

  /// Smallest entry. Must be nonempty.
  std::pair<PriorityKey, Item> front() const {
    if (queue_.empty()) throw std::logic_error("OpenList: front of empty list");
    return {queue_.begin()->first, queue_.begin()->second};
  }

  /// Removes and returns the smallest entry.
  std::pair<PriorityKey, Item> pop_min() {
    auto entry = front();
    queue_.erase(queue_.begin());
    index_.erase(entry.second);
    return entry;
  }

  // In-order traversal, smallest key first.
  const_iterator begin() const { return queue_.begin(); }
  const_iterator end() const { return queue_.end(); }

  std::size_t size() const { return queue_.size(); }
  bool empty() const { return queue_.empty(); }

  /// High-water mark of the queue size over the list's lifetime.
  std::size_t max_size_seen() const { return max_size_; }

  void clear() {
    queue_.clear();
    index_.clear();
  }

 private:
  QueueMap queue_;
  std::unordered_map<Item, PriorityKey, Hash> index_;
  std::uint64_t next_seq_ = 0;
  std::size_t max_size_ = 0;
};

}  // namespace parsearch
