#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parsearch/domains/grid.hpp"
#include "parsearch/planner.hpp"

namespace parsearch {

/// Instance generator settings for one benchmark. Either a random grid per
/// trial (width/height/density) or a fixed map file with random start/goal.
struct BenchDomainConfig {
  int width = 48;
  int height = 48;
  double obstacle_density = 0.25;
  std::string map_path;  // when nonempty, overrides the random map
  std::string primitives = "lattice18";  // grid4 | grid8 | lattice18
  int num_headings = 8;
  double goal_radius = 1.5;
  DelayModel delay;
};

std::vector<Primitive> primitives_by_name(const std::string& name);

/// Builds the instance for one trial. Deterministic in (config, seed).
RandomGridInstance make_bench_instance(const BenchDomainConfig& config, std::uint64_t seed);

struct TrialMatrix {
  std::vector<Algorithm> algorithms;
  std::vector<unsigned> thread_counts{1};
  std::vector<std::pair<double, double>> weight_eps{{1.0, 1.0}};  // (w, eps)
  int num_trials = 10;
  std::uint64_t seed = 1;
  BenchDomainConfig domain;
  double time_limit_s = 60;
  ThreadManagement thread_mgt = ThreadManagement::kSpawnOnDemand;
  bool warmup = true;  // one discarded run per cell before the timed trials
};

struct BenchRecord {
  int trial_id = 0;
  Algorithm algorithm = Algorithm::kAStar;
  unsigned n_threads = 1;
  double w = 1;
  double eps = 1;
  Outcome outcome = Outcome::kNoSolution;
  Cost cost = 0;
  double wall_time_s = 0;
  std::uint64_t edges_evaluated = 0;
  std::uint64_t states_expanded = 0;
  std::uint64_t threads_spawned = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Runs every (algorithm, thread count, weight/eps) cell over the trial set.
/// Trial i always uses seed + i, so every cell sees the identical instance
/// sequence; this is asserted by hashing instances per trial. Serial
/// algorithms run once regardless of the thread_counts list. Cells run
/// sequentially so a parallel planner under test owns the machine.
std::vector<BenchRecord> run_matrix(const TrialMatrix& matrix, std::ostream* progress = nullptr);

/// CSV with a fixed header, one row per record. Deterministic byte-for-byte.
void emit_csv(const std::vector<BenchRecord>& records, const std::string& path);
void write_csv(const std::vector<BenchRecord>& records, std::ostream& out);
std::vector<BenchRecord> read_csv(const std::string& path);
std::vector<BenchRecord> parse_csv(std::istream& in);

/// Per-cell aggregates over solved trials.
struct CellSummary {
  Algorithm algorithm = Algorithm::kAStar;
  unsigned n_threads = 1;
  double w = 1;
  double eps = 1;
  int trials = 0;
  int solved = 0;
  double solve_rate = 0;
  double mean_wall_s = 0;
  double median_wall_s = 0;
  double stddev_wall_s = 0;
  double mean_cost = 0;
  double mean_edges = 0;
  double mean_states = 0;
  double mean_threads_spawned = 0;
  // mean wall of (wastar, N_t=1, same w/eps) divided by this cell's mean wall.
  std::optional<double> speedup;
};

std::vector<CellSummary> summarize(const std::vector<BenchRecord>& records);
void emit_summary_csv(const std::vector<CellSummary>& cells, const std::string& path);

/// Self-contained SVG plots: speedup vs threads and edges evaluated vs
/// threads, one series per (algorithm, w, eps).
void emit_plots(const std::vector<CellSummary>& cells, const std::string& out_dir);

}  // namespace parsearch
