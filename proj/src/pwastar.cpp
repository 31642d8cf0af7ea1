#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "parsearch/open_list.hpp"
#include "parsearch/planner.hpp"
#include "parsearch/state_registry.hpp"
#include "planner_internal.hpp"

namespace parsearch::internal {
namespace {

// Weighted A* with parallel successor generation: expansion order is exactly
// serial wA*, but within one expansion the outgoing edges are evaluated
// concurrently by up to min(num_threads, branching factor) evaluators
// (helper threads plus the search thread itself). Results are applied in
// action order, so everything except wall time matches serial wA*.
class PwastarRun {
 public:
  PwastarRun(const SearchSpace& space, const PlannerConfig& config)
      : space_(space), config_(config), weight_(config.weight) {}

  ~PwastarRun() {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      stop_ = true;
      task_cv_.notify_all();
    }
    for (auto& t : helpers_) {
      if (t.joinable()) t.join();
    }
  }

  SearchResult run(StateKey start) {
    const auto t0 = Clock::now();
    const auto deadline = deadline_from(t0, config_.time_limit_s);

    SearchResult result;
    const StateId start_id = registry_.get_or_insert(start, space_.heuristic(start));
    {
      StateRecord& rec = registry_.record(start_id);
      rec.g = 0;
      rec.status = StateStatus::kOpenDummy;
      open_.insert_or_reposition(start_id, weight_ * rec.h, 0);
    }

    while (true) {
      if (Clock::now() > deadline) {
        result.outcome = Outcome::kTimeout;
        break;
      }
      if (error_) std::rethrow_exception(error_);
      if (open_.empty()) {
        result.outcome = Outcome::kNoSolution;
        break;
      }

      const StateId sid = open_.pop_min().second;
      StateRecord& rec = registry_.record(sid);
      if (config_.record_selection_log) {
        result.selection_log.push_back({rec.key, rec.g});
      }
      if (space_.is_goal(rec.key)) {
        result.outcome = Outcome::kSolved;
        result.cost = rec.g;
        result.path = backtrack(registry_, sid);
        break;
      }

      rec.status = StateStatus::kPartiallyExpanded;
      ensure_actions_known(rec, space_, config_.debug_checks);
      evaluate_all_edges(rec);

      for (ActionId a = 0; a < static_cast<ActionId>(rec.num_actions); ++a) {
        ++rec.n_successors_generated;
        const SuccessorResult& succ = results_[a];
        if (!succ.valid()) continue;
        const StateId tid = registry_.contains(succ.state)
                                ? registry_.id_of(succ.state)
                                : registry_.get_or_insert(succ.state,
                                                          space_.heuristic(succ.state));
        StateRecord& target = registry_.record(tid);
        const Cost g_new = rec.g + succ.cost;
        if (target.g <= g_new) continue;
        if (target.status == StateStatus::kClosed ||
            target.status == StateStatus::kPartiallyExpanded) {
          stats_.blocked_g_decreases.fetch_add(1, std::memory_order_relaxed);
          continue;
        }
        target.g = g_new;
        target.parent = ParentEdge{sid, a, succ.cost};
        target.status = StateStatus::kOpenDummy;
        open_.insert_or_reposition(tid, g_new + weight_ * target.h, g_new);
      }
      rec.status = StateStatus::kClosed;
      stats_.states_expanded.fetch_add(1, std::memory_order_relaxed);
    }

    result.stats = stats_.snapshot();
    result.stats.max_open_size = open_.max_size_seen();
    result.stats.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return result;
  }

 private:
  // Evaluates every outgoing edge of `rec` into results_. Tasks are claimed
  // one action at a time, so one slow edge does not hold up the cheap ones.
  void evaluate_all_edges(StateRecord& rec) {
    const std::uint32_t n = rec.num_actions;
    results_.assign(n, SuccessorResult{});
    if (n == 0) return;
    for (ActionId a = 0; a < static_cast<ActionId>(n); ++a) {
      claim_evaluation(rec, a, config_.debug_checks);
    }

    if (config_.num_threads <= 1 || n == 1) {
      for (ActionId a = 0; a < static_cast<ActionId>(n); ++a) {
        results_[a] = evaluate_edge(space_, rec.key, a, stats_);
      }
      return;
    }

    const std::size_t wanted = std::min<std::size_t>(config_.num_threads, n) - 1;
    while (helpers_.size() < wanted) {
      helpers_.emplace_back([this] { helper_loop(); });
      stats_.threads_spawned.fetch_add(1, std::memory_order_relaxed);
    }

    {
      std::lock_guard<std::mutex> lock(mutex_);
      task_source_ = rec.key;
      task_count_ = n;
      remaining_.store(n, std::memory_order_release);
      // Published last: a claim through next_action_ must see the fields above.
      next_action_.store(0, std::memory_order_release);
      ++task_generation_;
      task_cv_.notify_all();
    }

    work_share();

    std::unique_lock<std::mutex> lock(mutex_);
    done_cv_.wait(lock, [&] { return remaining_.load(std::memory_order_acquire) == 0; });
  }

  // Claims and evaluates pending actions of the current task; used by the
  // search thread and helpers alike.
  void work_share() {
    while (true) {
      const std::uint32_t a = next_action_.fetch_add(1, std::memory_order_acq_rel);
      if (a >= task_count_) return;
      try {
        results_[a] = evaluate_edge(space_, task_source_, static_cast<ActionId>(a), stats_);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (!error_) error_ = std::current_exception();
      }
      if (remaining_.fetch_sub(1, std::memory_order_acq_rel) == 1) {
        std::lock_guard<std::mutex> lock(mutex_);
        done_cv_.notify_all();
      }
    }
  }

  void helper_loop() {
    std::uint64_t seen = 0;
    while (true) {
      {
        std::unique_lock<std::mutex> lock(mutex_);
        task_cv_.wait(lock, [&] { return task_generation_ != seen || stop_; });
        if (stop_) return;
        seen = task_generation_;
      }
      work_share();
    }
  }

  const SearchSpace& space_;
  const PlannerConfig& config_;
  const double weight_;
  StateRegistry registry_;
  OpenList<StateId> open_;
  AtomicStats stats_;
  std::vector<SuccessorResult> results_;

  std::vector<std::thread> helpers_;
  std::mutex mutex_;
  std::condition_variable task_cv_;
  std::condition_variable done_cv_;
  StateKey task_source_ = 0;
  std::uint32_t task_count_ = 0;
  std::uint64_t task_generation_ = 0;
  std::atomic<std::uint32_t> next_action_{0};
  std::atomic<std::uint32_t> remaining_{0};
  bool stop_ = false;
  std::exception_ptr error_;
};

}  // namespace

SearchResult plan_pwastar(const SearchSpace& space, StateKey start, const PlannerConfig& config) {
  PwastarRun run(space, config);
  return run.run(start);
}

}  // namespace parsearch::internal
