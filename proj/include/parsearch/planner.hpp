#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parsearch/search_space.hpp"
#include "parsearch/types.hpp"

namespace parsearch {

enum class Algorithm {
  kAStar,    // serial A* (w = 1)
  kWAStar,   // serial weighted A*
  kEAStar,   // serial edge-based (w)A*
  kPWAStar,  // weighted A* with parallel successor evaluation
  kWPASE,    // state-parallel weighted A* with independence checks
  kEPASE,    // edge-parallel weighted A* with independence checks
};

const char* algorithm_name(Algorithm a);
bool algorithm_from_name(const std::string& name, Algorithm* out);
bool algorithm_is_serial(Algorithm a);

enum class ThreadManagement {
  // The coordinator spawns a worker only when all existing workers are busy,
  // capped at num_threads. Idle workers block.
  kSpawnOnDemand,
  // All num_threads workers start up front and busy-poll their mailboxes.
  // Kept as the legacy strategy whose idle-thread overhead the benchmark
  // exposes at high thread counts.
  kPreallocatedPool,
};

struct PlannerConfig {
  Algorithm algorithm = Algorithm::kAStar;
  double weight = 1.0;   // heuristic inflation w >= 1
  double epsilon = 1.0;  // independence relaxation eps >= 1
  unsigned num_threads = 1;
  ThreadManagement thread_mgt = ThreadManagement::kSpawnOnDemand;
  double time_limit_s = 300.0;
  std::uint64_t rng_seed = 0;
  // Scan all OPEN entries in the safety check even when weight <= epsilon.
  bool force_full_open_scan = false;
  // Fail fast on duplicate edge evaluations and duplicate CLOSED insertions.
  bool debug_checks = true;
  // Record (state, g) at every selection, for bound audits.
  bool record_selection_log = false;
};

enum class Outcome { kSolved, kNoSolution, kTimeout };

const char* outcome_name(Outcome o);
bool outcome_from_name(const std::string& name, Outcome* out);

/// One step of a solution path.
struct PathEdge {
  StateKey source = 0;
  ActionId action = 0;
  Cost cost = 0;
};

struct RunStats {
  std::uint64_t states_expanded = 0;   // states moved to CLOSED
  std::uint64_t edges_evaluated = 0;   // domain evaluator calls (real edges only)
  std::uint64_t dummy_expansions = 0;
  std::uint64_t max_open_size = 0;
  std::uint64_t threads_spawned = 0;
  double wall_time_s = 0;
  double lock_wait_time_s = 0;  // coordinator time spent blocked, diagnostic
  // g-improvements rejected because the target was already in BE/CLOSED.
  std::uint64_t blocked_g_decreases = 0;
};

/// g-value of a state at the moment one of its edges was selected for
/// expansion. Recorded when PlannerConfig::record_selection_log is set.
struct SelectionEvent {
  StateKey state = 0;
  Cost g = 0;
};

struct SearchResult {
  Outcome outcome = Outcome::kNoSolution;
  std::vector<PathEdge> path;  // empty unless solved
  Cost cost = kInfiniteCost;
  RunStats stats;
  std::vector<SelectionEvent> selection_log;
};

/// Runs the configured algorithm from `start` on `space`.
///
/// Solved results satisfy: the path starts at `start`, each edge's evaluated
/// successor is the next edge's source, the final successor is in the goal
/// region, and `cost` is the sum of the evaluated edge costs.
SearchResult plan(const SearchSpace& space, StateKey start, const PlannerConfig& config);

}  // namespace parsearch
