#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "parsearch/open_list.hpp"
#include "parsearch/state_registry.hpp"
#include "parsearch/types.hpp"

namespace parsearch {

/// Shared search state for one run: the state registry, the open list, the
/// BE and CLOSED sets, and the synchronization primitives every planner uses.
///
/// All mutation happens while holding `mutex`. StateKeys are immutable and may
/// be read without it. Every change to OPEN or BE bumps `change_epoch` and
/// notifies `cv`, so a thread can block until "OPEN or BE change".
///
/// The open list payload is Edge for edge-based planners and StateId for
/// state-based ones; everything else is common.
template <typename Item, typename Hash = std::hash<Item>>
class SearchCore {
 public:
  StateRegistry registry;
  OpenList<Item, Hash> open;
  std::unordered_set<StateId> be;

  std::mutex mutex;
  std::condition_variable cv;
  std::atomic<bool> terminate{false};

  /// Moves a state into BE. It must currently be in OPEN-dummy status.
  void mark_partially_expanded(StateId id) {
    StateRecord& rec = registry.record(id);
    if (rec.status != StateStatus::kOpenDummy) {
      throw std::logic_error("mark_partially_expanded: state not in OPEN");
    }
    rec.status = StateStatus::kPartiallyExpanded;
    be.insert(id);
    signal_change();
  }

  /// Moves a state from BE to CLOSED. Callers check the successor counter.
  void mark_closed(StateId id) {
    StateRecord& rec = registry.record(id);
    if (rec.status != StateStatus::kPartiallyExpanded || be.count(id) == 0) {
      throw std::logic_error("mark_closed: state not in BE");
    }
    rec.status = StateStatus::kClosed;
    be.erase(id);
    ++closed_count_;
    signal_change();
  }

  std::size_t closed_count() const { return closed_count_; }

  /// Bumps the change epoch and wakes all waiters. Call with the lock held.
  void signal_change() {
    ++change_epoch_;
    cv.notify_all();
  }

  std::uint64_t change_epoch() const { return change_epoch_; }

  /// Blocks until the change epoch moves past `seen`, termination is
  /// requested, or the deadline passes. Call with the lock held.
  template <typename Clock, typename Duration>
  void wait_for_change(std::unique_lock<std::mutex>& lock, std::uint64_t seen,
                       const std::chrono::time_point<Clock, Duration>& deadline) {
    cv.wait_until(lock, deadline, [&] {
      return change_epoch_ != seen || terminate.load(std::memory_order_relaxed);
    });
  }

  /// Sets the terminate flag and wakes everything. Call with the lock held.
  void request_terminate() {
    terminate.store(true, std::memory_order_release);
    cv.notify_all();
  }

 private:
  std::uint64_t change_epoch_ = 0;
  std::size_t closed_count_ = 0;
};

using EdgeSearchCore = SearchCore<Edge, EdgeHash>;
using StateSearchCore = SearchCore<StateId>;

}  // namespace parsearch
