#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <thread>
#include <vector>

#include "parsearch/independence.hpp"
#include "parsearch/planner.hpp"
#include "parsearch/shared_state.hpp"
#include "planner_internal.hpp"

namespace parsearch::internal {
namespace {

#if defined(__x86_64__) || defined(__i386__)
inline void cpu_pause() { __builtin_ia32_pause(); }
#else
inline void cpu_pause() { std::this_thread::yield(); }
#endif

// State-parallel weighted A*. The coordinator selects the smallest-f state
// that is independent of every smaller-f OPEN state and every state in BE;
// the assigned worker evaluates all of its outgoing edges sequentially and
// then moves it to CLOSED.
class WpaseRun {
 public:
  WpaseRun(const SearchSpace& space, const PlannerConfig& config)
      : space_(space),
        config_(config),
        weight_(config.weight),
        params_(IndependenceParams::make(config.weight, config.epsilon,
                                         config.force_full_open_scan)) {}

  SearchResult run(StateKey start) {
    const auto t0 = Clock::now();
    deadline_ = deadline_from(t0, config_.time_limit_s);

    {
      const StateId sid = core_.registry.get_or_insert(start, space_.heuristic(start));
      StateRecord& rec = core_.registry.record(sid);
      rec.g = 0;
      rec.status = StateStatus::kOpenDummy;
      core_.open.insert_or_reposition(sid, weight_ * rec.h, 0);
    }
    if (config_.thread_mgt == ThreadManagement::kPreallocatedPool) {
      std::unique_lock<std::mutex> lock(core_.mutex);
      while (workers_.size() < config_.num_threads) spawn_worker(nullptr);
    }

    SearchResult result;
    coordinate(result);

    {
      std::unique_lock<std::mutex> lock(core_.mutex);
      core_.request_terminate();
    }
    for (auto& slot : workers_) {
      if (slot->thread.joinable()) slot->thread.join();
    }
    if (worker_error_) std::rethrow_exception(worker_error_);

    result.stats = stats_.snapshot();
    result.stats.max_open_size = core_.open.max_size_seen();
    result.stats.lock_wait_time_s = coordinator_wait_s_;
    result.stats.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return result;
  }

 private:
  struct WorkerSlot {
    enum State : int { kIdle = 0, kAssigned = 1 };
    std::atomic<int> state{kIdle};
    StateId assigned = kInvalidStateId;
    std::thread thread;
  };

  void coordinate(SearchResult& result) {
    std::unique_lock<std::mutex> lock(core_.mutex);
    while (true) {
      if (Clock::now() > deadline_) {
        result.outcome = Outcome::kTimeout;
        return;
      }
      if (worker_error_) return;
      if (core_.open.empty() && core_.be.empty()) {
        result.outcome = Outcome::kNoSolution;
        return;
      }

      WorkerSlot* slot = idle_worker();
      if (slot == nullptr && workers_.size() >= config_.num_threads) {
        wait_for_wakeup(lock);
        continue;
      }

      StateId selected = kInvalidStateId;
      for (const auto& [key, sid] : core_.open) {
        if (state_safe_to_expand(sid, core_, space_, params_)) {
          selected = sid;
          break;
        }
      }
      if (selected == kInvalidStateId) {
        wait_for_wakeup(lock);
        continue;
      }

      core_.open.remove(selected);
      StateRecord& rec = core_.registry.record(selected);
      if (config_.record_selection_log) {
        result.selection_log.push_back({rec.key, rec.g});
      }
      if (space_.is_goal(rec.key)) {
        result.outcome = Outcome::kSolved;
        result.cost = rec.g;
        result.path = backtrack(core_.registry, selected);
        return;
      }
      core_.mark_partially_expanded(selected);

      if (slot != nullptr) {
        slot->assigned = selected;
        slot->state.store(WorkerSlot::kAssigned, std::memory_order_release);
        core_.cv.notify_all();
      } else {
        spawn_worker(&selected);
      }
    }
  }

  WorkerSlot* idle_worker() {
    for (auto& slot : workers_) {
      if (slot->state.load(std::memory_order_acquire) == WorkerSlot::kIdle) {
        return slot.get();
      }
    }
    return nullptr;
  }

  void spawn_worker(const StateId* initial) {
    auto slot = std::make_unique<WorkerSlot>();
    if (initial != nullptr) {
      slot->assigned = *initial;
      slot->state.store(WorkerSlot::kAssigned, std::memory_order_release);
    }
    WorkerSlot* raw = slot.get();
    workers_.push_back(std::move(slot));
    stats_.threads_spawned.fetch_add(1, std::memory_order_relaxed);
    raw->thread = std::thread([this, raw] { worker_loop(*raw); });
  }

  void wait_for_wakeup(std::unique_lock<std::mutex>& lock) {
    const auto wait_start = Clock::now();
    const std::uint64_t epoch = core_.change_epoch();
    core_.cv.wait_until(lock, deadline_, [&] {
      return core_.change_epoch() != epoch || idle_worker() != nullptr ||
             core_.terminate.load(std::memory_order_relaxed) || worker_error_ != nullptr;
    });
    coordinator_wait_s_ += std::chrono::duration<double>(Clock::now() - wait_start).count();
  }

  void worker_loop(WorkerSlot& slot) {
    const bool spin = config_.thread_mgt == ThreadManagement::kPreallocatedPool;
    while (true) {
      if (spin) {
        while (slot.state.load(std::memory_order_acquire) != WorkerSlot::kAssigned) {
          if (core_.terminate.load(std::memory_order_acquire)) return;
          cpu_pause();
        }
      } else {
        std::unique_lock<std::mutex> lock(core_.mutex);
        core_.cv.wait(lock, [&] {
          return slot.state.load(std::memory_order_relaxed) == WorkerSlot::kAssigned ||
                 core_.terminate.load(std::memory_order_relaxed);
        });
        if (slot.state.load(std::memory_order_relaxed) != WorkerSlot::kAssigned) return;
      }

      try {
        expand_state(slot.assigned, slot);
      } catch (...) {
        std::lock_guard<std::mutex> lock(core_.mutex);
        if (!worker_error_) worker_error_ = std::current_exception();
        core_.request_terminate();
        slot.state.store(WorkerSlot::kIdle, std::memory_order_release);
        return;
      }
    }
  }

  // CLOSED insertion and the idle flag are published in one critical section
  // so the coordinator never sees one without the other.
  void expand_state(StateId sid, WorkerSlot& slot) {
    std::unique_lock<std::mutex> lock(core_.mutex);
    StateRecord& rec = core_.registry.record(sid);
    ensure_actions_known(rec, space_, config_.debug_checks);

    for (ActionId a = 0; a < static_cast<ActionId>(rec.num_actions); ++a) {
      claim_evaluation(rec, a, config_.debug_checks);
      lock.unlock();
      const SuccessorResult succ = evaluate_edge(space_, rec.key, a, stats_);
      lock.lock();

      if (succ.valid()) {
        const StateId tid = core_.registry.contains(succ.state)
                                ? core_.registry.id_of(succ.state)
                                : core_.registry.get_or_insert(succ.state,
                                                               space_.heuristic(succ.state));
        StateRecord& target = core_.registry.record(tid);
        const Cost g_new = rec.g + succ.cost;
        if (target.g > g_new) {
          if (target.status == StateStatus::kClosed ||
              target.status == StateStatus::kPartiallyExpanded) {
            stats_.blocked_g_decreases.fetch_add(1, std::memory_order_relaxed);
          } else {
            target.g = g_new;
            target.parent = ParentEdge{sid, a, succ.cost};
            target.status = StateStatus::kOpenDummy;
            core_.open.insert_or_reposition(tid, g_new + weight_ * target.h, g_new);
            core_.signal_change();
          }
        }
      }
      ++rec.n_successors_generated;
    }

    core_.mark_closed(sid);
    stats_.states_expanded.fetch_add(1, std::memory_order_relaxed);
    slot.state.store(WorkerSlot::kIdle, std::memory_order_release);
    core_.signal_change();
  }

  const SearchSpace& space_;
  const PlannerConfig& config_;
  const double weight_;
  const IndependenceParams params_;
  StateSearchCore core_;
  AtomicStats stats_;
  std::vector<std::unique_ptr<WorkerSlot>> workers_;
  std::exception_ptr worker_error_;
  Clock::time_point deadline_{};
  double coordinator_wait_s_ = 0;
};

}  // namespace

SearchResult plan_wpase(const SearchSpace& space, StateKey start, const PlannerConfig& config) {
  WpaseRun run(space, config);
  return run.run(start);
}

}  // namespace parsearch::internal
