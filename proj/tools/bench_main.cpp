#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "parsearch/bench.hpp"
#include "parsearch/domains/explicit_graph.hpp"
#include "parsearch/domains/grid.hpp"
#include "parsearch/oracle.hpp"
#include "parsearch/planner.hpp"

namespace {

using namespace parsearch;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

bool verbose() {
  const char* env = std::getenv("BENCH_VERBOSE");
  return env != nullptr && env[0] != '\0' && env[0] != '0';
}

// Flat key=value file; '#' and ';' start comments, [section] lines are
// ignored so grouped files stay readable.
std::unordered_map<std::string, std::string> parse_ini(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  std::unordered_map<std::string, std::string> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line = line.substr(0, comment);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--config", "line " + std::to_string(line_no) +
                                                 ": expected key=value");
    }
    values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return values;
}

double parse_duration_ms(const std::string& text) {
  std::size_t pos = 0;
  const double value = std::stod(text, &pos);
  const std::string unit = text.substr(pos);
  if (unit == "ms" || unit.empty()) return value;
  if (unit == "s") return value * 1000.0;
  if (unit == "us") return value / 1000.0;
  throw std::invalid_argument("unknown duration unit: " + unit);
}

DelayModel parse_delay_spec(const std::string& spec, std::uint64_t seed) {
  if (spec.empty() || spec == "none") return DelayModel::none();
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "fixed") {
    return DelayModel::fixed(parse_duration_ms(arg));
  }
  if (kind == "per-action") {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open per-action delay file " + arg);
    std::vector<double> ms;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      ms.push_back(parse_duration_ms(line));
    }
    return DelayModel::per_action(std::move(ms));
  }
  if (kind == "lognormal") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("lognormal delay needs MU,SIGMA");
    }
    return DelayModel::lognormal(std::stod(arg.substr(0, comma)),
                                 std::stod(arg.substr(comma + 1)), seed);
  }
  throw std::invalid_argument("unknown delay spec: " + spec);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool parse_xy(const std::string& text, int* x, int* y) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    *x = std::stoi(text.substr(0, comma));
    *y = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

int cmd_run(const std::string& config_path, std::string algos, std::string threads,
            double w, double eps, int trials, std::uint64_t seed, std::string map,
            std::string delay_spec, double time_limit, std::string out_dir,
            std::string thread_mgt, std::string primitives, int headings,
            int width, int height, double density, double goal_radius) {
  // INI values fill in whatever the command line left at its default.
  if (!config_path.empty()) {
    const auto ini = parse_ini(config_path);
    auto pick = [&](const char* key, auto& slot) {
      const auto it = ini.find(key);
      if (it == ini.end()) return false;
      std::istringstream ss(it->second);
      ss >> slot;
      return true;
    };
    std::string s;
    if (algos.empty() && pick("algos", s)) algos = s;
    s.clear();
    if (threads.empty() && pick("threads", s)) threads = s;
    if (w <= 0) pick("w", w);
    if (eps <= 0) pick("eps", eps);
    if (trials <= 0) pick("trials", trials);
    if (seed == 0) pick("seed", seed);
    s.clear();
    if (map.empty() && pick("map", s)) map = s;
    s.clear();
    if (delay_spec.empty() && pick("delay", s)) delay_spec = s;
    if (time_limit <= 0) pick("time_limit", time_limit);
    s.clear();
    if (out_dir.empty() && pick("out", s)) out_dir = s;
    s.clear();
    if (thread_mgt.empty() && pick("thread_mgt", s)) thread_mgt = s;
    s.clear();
    if (primitives.empty() && pick("primitives", s)) primitives = s;
    if (headings <= 0) pick("headings", headings);
    if (width <= 0) pick("width", width);
    if (height <= 0) pick("height", height);
    if (density < 0) pick("density", density);
    if (goal_radius < 0) pick("goal_radius", goal_radius);
  }

  TrialMatrix matrix;
  matrix.domain.map_path = map;
  matrix.domain.primitives = primitives.empty() ? "lattice18" : primitives;
  matrix.domain.num_headings = headings > 0 ? headings : 8;
  matrix.domain.width = width > 0 ? width : 48;
  matrix.domain.height = height > 0 ? height : 48;
  matrix.domain.obstacle_density = density >= 0 ? density : 0.25;
  matrix.domain.goal_radius = goal_radius >= 0 ? goal_radius : 1.5;
  matrix.num_trials = trials > 0 ? trials : 10;
  matrix.seed = seed != 0 ? seed : 1;
  matrix.time_limit_s = time_limit > 0 ? time_limit : 60;
  matrix.domain.delay = parse_delay_spec(delay_spec, matrix.seed);

  const double ww = w > 0 ? w : 1.0;
  matrix.weight_eps = {{ww, eps > 0 ? eps : ww}};

  if (!thread_mgt.empty()) {
    if (thread_mgt == "spawn") matrix.thread_mgt = ThreadManagement::kSpawnOnDemand;
    else if (thread_mgt == "pool") matrix.thread_mgt = ThreadManagement::kPreallocatedPool;
    else throw CLI::ValidationError("--thread-mgt", "must be 'spawn' or 'pool'");
  }

  for (const std::string& name : split_commas(algos.empty() ? "wastar,epase" : algos)) {
    Algorithm a;
    if (!algorithm_from_name(name, &a)) {
      throw CLI::ValidationError("--algo", "unknown algorithm " + name);
    }
    matrix.algorithms.push_back(a);
  }
  matrix.thread_counts.clear();
  for (const std::string& t : split_commas(threads.empty() ? "1" : threads)) {
    matrix.thread_counts.push_back(static_cast<unsigned>(std::stoul(t)));
  }

  const auto records = run_matrix(matrix, verbose() ? &std::cerr : nullptr);
  const auto cells = summarize(records);

  if (out_dir.empty()) out_dir = ".";
  std::filesystem::create_directories(out_dir);
  emit_csv(records, out_dir + "/records.csv");
  emit_summary_csv(cells, out_dir + "/summary.csv");
  emit_plots(cells, out_dir);

  std::cout << "algorithm threads w eps solved/trials mean_wall(s) mean_edges speedup\n";
  for (const auto& c : cells) {
    std::cout << algorithm_name(c.algorithm) << ' ' << c.n_threads << ' ' << c.w << ' '
              << c.eps << ' ' << c.solved << '/' << c.trials << ' ' << c.mean_wall_s << ' '
              << c.mean_edges << ' ';
    if (c.speedup) std::cout << *c.speedup;
    else std::cout << '-';
    std::cout << '\n';
  }
  std::cout << "wrote " << out_dir << "/records.csv, summary.csv, *.svg\n";
  return kExitOk;
}

int cmd_oracle(const std::string& map_path, const std::string& start_text,
               const std::string& goal_text, const std::string& primitives) {
  int sx, sy, gx, gy;
  if (!parse_xy(start_text, &sx, &sy) || !parse_xy(goal_text, &gx, &gy)) {
    throw CLI::ValidationError("--start/--goal", "expected X,Y");
  }
  const OccupancyMap map = load_map(map_path);
  GridDomainConfig config;
  config.width = map.width;
  config.height = map.height;
  config.occupancy = map.cells;
  config.primitives = primitives_by_name(primitives);
  config.goal = GoalRegion::cell(gx, gy);
  GridDomain domain(config);

  const OracleResult result =
      oracle_shortest_paths(domain, domain.state(sx, sy), /*exhaustive=*/false);
  if (!result.reachable()) {
    std::cout << "unreachable\n";
    return kExitOk;
  }
  std::cout << *result.optimal_cost << '\n';
  return kExitOk;
}

bool check(bool ok, const std::string& what, int& failures) {
  std::cout << (ok ? "[pass] " : "[FAIL] ") << what << '\n';
  if (!ok) ++failures;
  return ok;
}

// Quick property sweep on small instances; the full test suites live in the
// repository's test binaries.
int cmd_verify() {
  int failures = 0;

  // Optimality vs ground truth at w = eps = 1, all algorithms.
  {
    bool all_optimal = true;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const auto instance = random_grid(seed, 24, 24, seed % 3 == 0 ? 0.0 : 0.25,
                                        seed % 2 == 0 ? grid4_primitives() : grid8_primitives());
      GridDomain domain(instance.config);
      const auto truth = oracle_shortest_paths(domain, instance.start);
      for (Algorithm algo : {Algorithm::kAStar, Algorithm::kEAStar, Algorithm::kPWAStar,
                             Algorithm::kWPASE, Algorithm::kEPASE}) {
        PlannerConfig config;
        config.algorithm = algo;
        config.num_threads = algorithm_is_serial(algo) ? 1 : 4;
        const SearchResult result = plan(domain, instance.start, config);
        if (result.outcome != Outcome::kSolved || result.cost != *truth.optimal_cost) {
          all_optimal = false;
        }
      }
    }
    check(all_optimal, "optimal cost parity with ground truth at w=eps=1", failures);
  }

  // Bounded suboptimality at w = eps = 5.
  {
    bool bounded = true;
    for (std::uint64_t seed = 21; seed <= 30; ++seed) {
      const auto instance = random_grid(seed, 24, 24, 0.2, grid8_primitives());
      GridDomain domain(instance.config);
      const auto truth = oracle_shortest_paths(domain, instance.start);
      for (Algorithm algo : {Algorithm::kWAStar, Algorithm::kEAStar, Algorithm::kWPASE,
                             Algorithm::kEPASE}) {
        PlannerConfig config;
        config.algorithm = algo;
        config.weight = 5;
        config.epsilon = 5;
        config.num_threads = algorithm_is_serial(algo) ? 1 : 4;
        const SearchResult result = plan(domain, instance.start, config);
        if (result.outcome != Outcome::kSolved || result.cost > 5 * *truth.optimal_cost) {
          bounded = false;
        }
      }
    }
    check(bounded, "solution cost within eps * optimal at w=eps=5", failures);
  }

  // Unreachable goals terminate with NO_SOLUTION.
  {
    bool complete = true;
    for (std::uint64_t seed = 41; seed <= 44; ++seed) {
      auto instance = random_grid(seed, 16, 16, 0.1, grid4_primitives());
      // Wall off the goal column.
      auto& config = instance.config;
      const int gx = instance.goal_x;
      for (int y = 0; y < config.height; ++y) {
        for (int x = std::max(0, gx - 1); x <= std::min(config.width - 1, gx + 1); ++x) {
          config.occupancy[static_cast<std::size_t>(y) * config.width + x] = 1;
        }
      }
      config.occupancy[static_cast<std::size_t>(instance.goal_y) * config.width + gx] = 0;
      if (instance.start_x >= gx - 1 && instance.start_x <= gx + 1) continue;
      GridDomain domain(config);
      for (Algorithm algo : {Algorithm::kAStar, Algorithm::kEAStar, Algorithm::kEPASE}) {
        PlannerConfig pc;
        pc.algorithm = algo;
        pc.num_threads = algorithm_is_serial(algo) ? 1 : 4;
        const SearchResult result = plan(domain, instance.start, pc);
        if (result.outcome != Outcome::kNoSolution) complete = false;
      }
    }
    check(complete, "walled-off goals end in NO_SOLUTION", failures);
  }

  // Pairwise heuristic triangle inequality on sampled states.
  {
    const auto instance = random_grid(7, 32, 32, 0.1, grid8_primitives());
    GridDomain domain(instance.config);
    bool triangle = true;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coord(0, 31);
    for (int i = 0; i < 2000; ++i) {
      const StateKey a = domain.state(coord(rng), coord(rng));
      const StateKey b = domain.state(coord(rng), coord(rng));
      const StateKey c = domain.state(coord(rng), coord(rng));
      if (domain.pairwise_heuristic(a, c) >
          domain.pairwise_heuristic(a, b) + domain.pairwise_heuristic(b, c) + 1e-9) {
        triangle = false;
      }
      if (domain.pairwise_heuristic(a, a) != 0) triangle = false;
    }
    check(triangle, "pairwise heuristic is forward-backward consistent", failures);
  }

  if (failures > 0) {
    std::cout << failures << " verification check(s) failed\n";
    return kExitVerifyFailed;
  }
  std::cout << "all verification checks passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel best-first search benchmark runner"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a benchmark matrix and emit CSV/plots");
  std::string config_path, algos, threads, map, delay_spec, out_dir, thread_mgt, primitives;
  double w = 0, eps = 0, time_limit = 0, density = -1, goal_radius = -1;
  int trials = 0, headings = 0, width = 0, height = 0;
  std::uint64_t seed = 0;
  run->add_option("--config", config_path, "INI config file (key = value)");
  run->add_option("--algo", algos, "comma list: astar,wastar,eastar,pwastar,wpase,epase");
  run->add_option("--threads", threads, "comma list of thread counts");
  run->add_option("--w", w, "heuristic inflation weight");
  run->add_option("--eps", eps, "independence relaxation");
  run->add_option("--trials", trials, "trials per cell");
  run->add_option("--seed", seed, "base seed; trial i uses seed+i");
  run->add_option("--map", map, "grid map file (random maps otherwise)");
  run->add_option("--delay", delay_spec,
                  "edge evaluation delay: fixed:10ms | per-action:FILE | lognormal:MU,SIGMA");
  run->add_option("--time-limit", time_limit, "per-trial time limit in seconds");
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--thread-mgt", thread_mgt, "spawn | pool");
  run->add_option("--primitives", primitives, "grid4 | grid8 | lattice18");
  run->add_option("--headings", headings, "heading bins (1 = planar)");
  run->add_option("--width", width, "random map width");
  run->add_option("--height", height, "random map height");
  run->add_option("--density", density, "random obstacle density [0,1)");
  run->add_option("--goal-radius", goal_radius, "goal region radius in cells");

  auto* oracle = app.add_subcommand("oracle", "print the optimal cost for one query");
  std::string oracle_map, start_text, goal_text, oracle_prims = "grid8";
  oracle->add_option("--map", oracle_map, "grid map file")->required();
  oracle->add_option("--start", start_text, "start cell X,Y")->required();
  oracle->add_option("--goal", goal_text, "goal cell X,Y")->required();
  oracle->add_option("--primitives", oracle_prims, "grid4 | grid8 | lattice18");

  auto* verify = app.add_subcommand("verify", "run the property suite on small instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run->parsed()) {
      return cmd_run(config_path, algos, threads, w, eps, trials, seed, map, delay_spec,
                     time_limit, out_dir, thread_mgt, primitives, headings, width, height,
                     density, goal_radius);
    }
    if (oracle->parsed()) {
      return cmd_oracle(oracle_map, start_text, goal_text, oracle_prims);
    }
    if (verify->parsed()) {
      return cmd_verify();
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
