#include <vector>

#include <doctest.h>

#include "parsearch/domains/explicit_graph.hpp"
#include "parsearch/domains/grid.hpp"
#include "parsearch/oracle.hpp"
#include "parsearch/planner.hpp"

using namespace parsearch;

namespace {

PlannerConfig make_config(Algorithm algo, double w = 1, double eps = 1, unsigned threads = 1) {
  PlannerConfig config;
  config.algorithm = algo;
  config.weight = w;
  config.epsilon = eps;
  config.num_threads = threads;
  return config;
}

}  // namespace

TEST_CASE("parallel planners return optimal costs at w=eps=1") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto instance =
        random_grid(seed + 200, 20, 20, seed % 2 ? 0.25 : 0.0, grid8_primitives());
    GridDomain domain(instance.config);
    const auto truth = oracle_shortest_paths(domain, instance.start);
    for (Algorithm algo : {Algorithm::kPWAStar, Algorithm::kWPASE, Algorithm::kEPASE}) {
      for (unsigned threads : {1u, 4u}) {
        const auto result = plan(domain, instance.start, make_config(algo, 1, 1, threads));
        REQUIRE(result.outcome == Outcome::kSolved);
        CHECK(result.cost == *truth.optimal_cost);
      }
    }
  }
}

TEST_CASE("pwastar reproduces wastar expansions, evaluations and cost") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto instance = random_grid(seed + 300, 24, 24, 0.2, grid8_primitives());
    GridDomain domain(instance.config);
    const auto serial = plan(domain, instance.start, make_config(Algorithm::kWAStar, 3, 3));
    for (unsigned threads : {1u, 4u}) {
      const auto par = plan(domain, instance.start, make_config(Algorithm::kPWAStar, 3, 3, threads));
      REQUIRE(par.outcome == Outcome::kSolved);
      CHECK(par.cost == serial.cost);
      CHECK(par.stats.states_expanded == serial.stats.states_expanded);
      CHECK(par.stats.edges_evaluated == serial.stats.edges_evaluated);
    }
  }
}

TEST_CASE("single-worker wpase matches serial wastar counts") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto instance = random_grid(seed + 400, 20, 20, 0.2, grid8_primitives());
    GridDomain domain(instance.config);
    const auto serial = plan(domain, instance.start, make_config(Algorithm::kWAStar, 1, 1));
    const auto par = plan(domain, instance.start, make_config(Algorithm::kWPASE, 1, 1, 1));
    REQUIRE(par.outcome == Outcome::kSolved);
    CHECK(par.cost == serial.cost);
    CHECK(par.stats.states_expanded == serial.stats.states_expanded);
    CHECK(par.stats.edges_evaluated == serial.stats.edges_evaluated);
  }
}

TEST_CASE("single-worker epase matches serial edge-based search counts") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto instance = random_grid(seed + 500, 20, 20, 0.2, grid8_primitives());
    GridDomain domain(instance.config);
    for (double w : {1.0, 5.0}) {
      const auto serial = plan(domain, instance.start, make_config(Algorithm::kEAStar, w, w));
      const auto par = plan(domain, instance.start, make_config(Algorithm::kEPASE, w, w, 1));
      REQUIRE(par.outcome == Outcome::kSolved);
      CHECK(par.cost == serial.cost);
      CHECK(par.stats.edges_evaluated == serial.stats.edges_evaluated);
      CHECK(par.stats.dummy_expansions == serial.stats.dummy_expansions);
    }
  }
}

TEST_CASE("single-worker runs are deterministic") {
  const auto instance = random_grid(321, 20, 20, 0.2, grid8_primitives());
  GridDomain domain(instance.config);
  for (Algorithm algo : {Algorithm::kEPASE, Algorithm::kWPASE}) {
    const auto a = plan(domain, instance.start, make_config(algo, 1, 1, 1));
    const auto b = plan(domain, instance.start, make_config(algo, 1, 1, 1));
    CHECK(a.cost == b.cost);
    CHECK(a.stats.edges_evaluated == b.stats.edges_evaluated);
    CHECK(a.stats.states_expanded == b.stats.states_expanded);
  }
}

TEST_CASE("bounded suboptimality holds under parallel execution") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto instance = random_grid(seed + 600, 20, 20, 0.25, grid8_primitives());
    GridDomain domain(instance.config);
    const auto truth = oracle_shortest_paths(domain, instance.start);
    for (Algorithm algo : {Algorithm::kWPASE, Algorithm::kEPASE}) {
      // w <= eps: the bound is eps.
      auto result = plan(domain, instance.start, make_config(algo, 1.5, 3.0, 4));
      REQUIRE(result.outcome == Outcome::kSolved);
      CHECK(result.cost <= 3.0 * *truth.optimal_cost);
      // w > eps with a full OPEN scan: the bound is max(eps, w) = w.
      result = plan(domain, instance.start, make_config(algo, 3.0, 1.5, 4));
      REQUIRE(result.outcome == Outcome::kSolved);
      CHECK(result.cost <= 3.0 * *truth.optimal_cost);
    }
  }
}

TEST_CASE("no duplicate evaluations or closures under concurrency") {
  // debug_checks is on: a duplicate evaluation or a duplicate CLOSED
  // insertion throws out of plan(). Jittered delays force real overlap.
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto instance = random_grid(seed + 700, 16, 16, 0.2, grid8_primitives());
    instance.config.delay = DelayModel::lognormal(-1.0, 0.7, seed);
    GridDomain domain(instance.config);
    const auto truth = oracle_shortest_paths(domain, instance.start);
    for (Algorithm algo : {Algorithm::kWPASE, Algorithm::kEPASE}) {
      for (unsigned threads : {2u, 8u}) {
        const auto result = plan(domain, instance.start, make_config(algo, 1, 1, threads));
        REQUIRE(result.outcome == Outcome::kSolved);
        CHECK(result.cost == *truth.optimal_cost);
        // Each closed state was expanded exactly once.
        CHECK(result.stats.states_expanded <= truth.optimal_g.size());
      }
    }
  }
}

TEST_CASE("spawn-on-demand only spawns what the search can use") {
  // Two parallel chains: at most two edges are ever in flight, so at most
  // three workers ever get spawned no matter the budget.
  const int chain_len = 12;
  ExplicitGraph graph(2 * chain_len + 2);
  // Node 0 forks into chains a (1..chain_len) and b (chain_len+1..2*chain_len).
  graph.add_edge(0, 1, 1);
  graph.add_edge(0, chain_len + 1, 1);
  for (int i = 1; i < chain_len; ++i) {
    graph.add_edge(i, i + 1, 1);
    graph.add_edge(chain_len + i, chain_len + i + 1, 1);
  }
  const std::uint32_t goal = 2 * chain_len + 1;
  graph.add_edge(chain_len, goal, 1);
  graph.add_edge(2 * chain_len, goal, 1);
  graph.set_goal(goal);
  // Distinct states far apart by the pairwise estimate, so both chains stay
  // mutually independent and can be expanded concurrently.
  std::vector<std::vector<Cost>> pairwise(graph.num_states(),
                                          std::vector<Cost>(graph.num_states(), 1e6));
  for (std::size_t i = 0; i < graph.num_states(); ++i) pairwise[i][i] = 0;
  graph.set_pairwise_table(pairwise);
  graph.set_evaluation_delay_ms(3.0);

  auto config = make_config(Algorithm::kEPASE, 1, 1, 8);
  const auto result = plan(graph, 0, config);
  REQUIRE(result.outcome == Outcome::kSolved);
  CHECK(result.stats.threads_spawned >= 1);
  CHECK(result.stats.threads_spawned <= 3);

  config.thread_mgt = ThreadManagement::kPreallocatedPool;
  const auto pool = plan(graph, 0, config);
  REQUIRE(pool.outcome == Outcome::kSolved);
  CHECK(pool.stats.threads_spawned == 8);
}

TEST_CASE("preallocated pools spawn the full budget regardless of work") {
  GridDomainConfig config;
  config.width = 4;
  config.height = 4;
  config.occupancy.assign(16, 0);
  config.primitives = grid4_primitives();
  config.goal = GoalRegion::cell(3, 3);
  GridDomain domain(config);
  auto pc = make_config(Algorithm::kEPASE, 1, 1, 6);
  pc.thread_mgt = ThreadManagement::kPreallocatedPool;
  const auto result = plan(domain, domain.state(0, 0), pc);
  REQUIRE(result.outcome == Outcome::kSolved);
  CHECK(result.stats.threads_spawned == 6);
}

TEST_CASE("parallel planners detect unsolvable instances") {
  auto config = GridDomainConfig{};
  config.width = 9;
  config.height = 9;
  config.occupancy.assign(81, 0);
  for (int y = 0; y < 9; ++y) config.occupancy[static_cast<std::size_t>(y) * 9 + 6] = 1;
  config.primitives = grid8_primitives();
  config.goal = GoalRegion::cell(8, 4);
  GridDomain domain(config);
  for (Algorithm algo : {Algorithm::kPWAStar, Algorithm::kWPASE, Algorithm::kEPASE}) {
    for (unsigned threads : {1u, 4u}) {
      const auto result = plan(domain, domain.state(0, 0), make_config(algo, 1, 1, threads));
      CHECK(result.outcome == Outcome::kNoSolution);
    }
  }
}

TEST_CASE("jittered delays do not break termination") {
  // Watchdog is the ctest timeout; each run must come back solved.
  for (int repeat = 0; repeat < 10; ++repeat) {
    auto instance = random_grid(repeat + 900, 14, 14, 0.2, grid8_primitives());
    instance.config.delay = DelayModel::lognormal(-1.5, 1.0, repeat + 1);
    GridDomain domain(instance.config);
    const auto result =
        plan(domain, instance.start, make_config(Algorithm::kEPASE, 2, 2, 8));
    CHECK(result.outcome == Outcome::kSolved);
  }
}

TEST_CASE("selection-time g stays within max(eps, w) of the true distance") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto instance = random_grid(seed + 1000, 16, 16, 0.2, grid8_primitives());
    GridDomain domain(instance.config);
    const auto truth = oracle_shortest_paths(domain, instance.start);
    for (auto [w, eps] : {std::pair{1.0, 1.0}, std::pair{5.0, 5.0}}) {
      auto config = make_config(Algorithm::kEPASE, w, eps, 4);
      config.record_selection_log = true;
      const auto result = plan(domain, instance.start, config);
      REQUIRE(result.outcome == Outcome::kSolved);
      const double lambda = std::max(eps, w);
      for (const SelectionEvent& ev : result.selection_log) {
        const auto it = truth.optimal_g.find(ev.state);
        REQUIRE(it != truth.optimal_g.end());
        CHECK(ev.g <= lambda * it->second + 1e-9);
      }
    }
  }
}

TEST_CASE("timeouts are honored by the parallel planners") {
  const auto instance = random_grid(31, 32, 32, 0.1, grid8_primitives());
  auto grid_config = instance.config;
  grid_config.delay = DelayModel::fixed(5.0);
  GridDomain domain(grid_config);
  for (Algorithm algo : {Algorithm::kWPASE, Algorithm::kEPASE}) {
    auto config = make_config(algo, 1, 1, 2);
    config.time_limit_s = 0.05;
    const auto result = plan(domain, instance.start, config);
    CHECK(result.outcome == Outcome::kTimeout);
  }
}
