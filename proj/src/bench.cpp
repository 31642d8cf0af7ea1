#include "parsearch/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "parsearch/oracle.hpp"

namespace parsearch {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CellKey {
  Algorithm algorithm;
  unsigned n_threads;
  double w;
  double eps;

  friend bool operator<(const CellKey& a, const CellKey& b) {
    return std::tie(a.algorithm, a.n_threads, a.w, a.eps) <
           std::tie(b.algorithm, b.n_threads, b.w, b.eps);
  }
};

}  // namespace

std::vector<Primitive> primitives_by_name(const std::string& name) {
  if (name == "grid4") return grid4_primitives();
  if (name == "grid8") return grid8_primitives();
  if (name == "lattice18") return lattice18_primitives();
  throw std::invalid_argument("unknown primitive set: " + name);
}

RandomGridInstance make_bench_instance(const BenchDomainConfig& config, std::uint64_t seed) {
  const auto primitives = primitives_by_name(config.primitives);
  if (config.map_path.empty()) {
    return random_grid(seed, config.width, config.height, config.obstacle_density,
                       primitives, config.num_headings, config.goal_radius,
                       /*require_solvable=*/true, config.delay);
  }

  // Fixed map: only start and goal vary per trial.
  const OccupancyMap map = load_map(config.map_path);
  GridDomainConfig domain_config;
  domain_config.width = map.width;
  domain_config.height = map.height;
  domain_config.occupancy = map.cells;
  domain_config.num_headings = config.num_headings;
  domain_config.primitives = primitives;
  domain_config.delay = config.delay;

  std::vector<std::pair<int, int>> free_cells;
  for (int y = 0; y < map.height; ++y) {
    for (int x = 0; x < map.width; ++x) {
      if (!domain_config.blocked(x, y)) free_cells.emplace_back(x, y);
    }
  }
  if (free_cells.size() < 2) {
    throw std::runtime_error("make_bench_instance: map has fewer than two free cells");
  }

  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull);
  std::uniform_int_distribution<std::size_t> pick(0, free_cells.size() - 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const auto [gx, gy] = free_cells[pick(rng)];
    const auto [sx, sy] = free_cells[pick(rng)];
    domain_config.goal = config.goal_radius > 0
                             ? GoalRegion::circle(gx, gy, config.goal_radius)
                             : GoalRegion::cell(gx, gy);
    if (domain_config.goal.contains(sx, sy)) continue;

    RandomGridInstance instance;
    instance.config = domain_config;
    instance.start_x = sx;
    instance.start_y = sy;
    instance.goal_x = gx;
    instance.goal_y = gy;
    GridDomain domain(domain_config);
    instance.start = domain.state(sx, sy, 0);
    if (oracle_shortest_paths(domain, instance.start, /*exhaustive=*/false).reachable()) {
      return instance;
    }
  }
  throw std::runtime_error("make_bench_instance: no solvable start/goal pair on map");
}

std::vector<BenchRecord> run_matrix(const TrialMatrix& matrix, std::ostream* progress) {
  if (matrix.num_trials <= 0) throw std::invalid_argument("run_matrix: no trials");

  std::vector<BenchRecord> records;
  std::unordered_map<int, std::uint64_t> trial_hash;

  auto instance_for = [&](int trial) {
    RandomGridInstance instance = make_bench_instance(matrix.domain, matrix.seed + trial);
    GridDomain domain(instance.config);
    const std::uint64_t h = domain.instance_hash() ^ (instance.start * 0x9e3779b97f4a7c15ull);
    auto [it, inserted] = trial_hash.try_emplace(trial, h);
    if (!inserted && it->second != h) {
      throw std::logic_error("run_matrix: instance mismatch across cells");
    }
    return instance;
  };

  for (const Algorithm algo : matrix.algorithms) {
    std::vector<unsigned> threads = matrix.thread_counts;
    if (algorithm_is_serial(algo)) threads = {1};
    for (const unsigned n_threads : threads) {
      for (const auto& [w, eps] : matrix.weight_eps) {
        PlannerConfig config;
        config.algorithm = algo;
        config.weight = (algo == Algorithm::kAStar) ? 1.0 : w;
        config.epsilon = eps;
        config.num_threads = n_threads;
        config.thread_mgt = matrix.thread_mgt;
        config.time_limit_s = matrix.time_limit_s;

        if (progress != nullptr) {
          *progress << "cell " << algorithm_name(algo) << " threads=" << n_threads
                    << " w=" << config.weight << " eps=" << eps << std::flush;
        }

        int failures = 0;
        for (int trial = matrix.warmup ? -1 : 0; trial < matrix.num_trials; ++trial) {
          const RandomGridInstance instance = instance_for(std::max(trial, 0));
          GridDomain domain(instance.config);
          config.rng_seed = matrix.seed + std::max(trial, 0);
          try {
            const SearchResult result = plan(domain, instance.start, config);
            if (trial < 0) continue;  // warm-up run, discarded
            BenchRecord rec;
            rec.trial_id = trial;
            rec.algorithm = algo;
            rec.n_threads = n_threads;
            rec.w = config.weight;
            rec.eps = eps;
            rec.outcome = result.outcome;
            rec.cost = result.outcome == Outcome::kSolved ? result.cost : 0;
            rec.wall_time_s = result.stats.wall_time_s;
            rec.edges_evaluated = result.stats.edges_evaluated;
            rec.states_expanded = result.stats.states_expanded;
            rec.threads_spawned = result.stats.threads_spawned;
            records.push_back(rec);
          } catch (const std::exception&) {
            if (++failures >= 3) break;  // abandon the cell, keep the matrix
          }
        }
        if (progress != nullptr) *progress << " done\n" << std::flush;
      }
    }
  }
  return records;
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  out << "trial_id,algorithm,n_threads,w,eps,outcome,cost,wall_time,"
         "edges_evaluated,states_expanded,threads_spawned\n";
  for (const BenchRecord& r : records) {
    out << r.trial_id << ',' << algorithm_name(r.algorithm) << ',' << r.n_threads << ','
        << fmt_double(r.w) << ',' << fmt_double(r.eps) << ',' << outcome_name(r.outcome) << ','
        << fmt_double(r.cost) << ',' << fmt_double(r.wall_time_s) << ',' << r.edges_evaluated
        << ',' << r.states_expanded << ',' << r.threads_spawned << '\n';
  }
}

void emit_csv(const std::vector<BenchRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_csv: cannot write " + path);
  write_csv(records, out);
  if (!out.good()) throw std::runtime_error("emit_csv: write failed for " + path);
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
  std::vector<BenchRecord> records;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("parse_csv: empty input");
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 11) {
      throw std::runtime_error("parse_csv: bad field count at line " + std::to_string(line_no));
    }
    BenchRecord r;
    r.trial_id = std::stoi(fields[0]);
    if (!algorithm_from_name(fields[1], &r.algorithm)) {
      throw std::runtime_error("parse_csv: unknown algorithm at line " + std::to_string(line_no));
    }
    r.n_threads = static_cast<unsigned>(std::stoul(fields[2]));
    r.w = std::stod(fields[3]);
    r.eps = std::stod(fields[4]);
    if (!outcome_from_name(fields[5], &r.outcome)) {
      throw std::runtime_error("parse_csv: unknown outcome at line " + std::to_string(line_no));
    }
    r.cost = std::stod(fields[6]);
    r.wall_time_s = std::stod(fields[7]);
    r.edges_evaluated = std::stoull(fields[8]);
    r.states_expanded = std::stoull(fields[9]);
    r.threads_spawned = std::stoull(fields[10]);
    records.push_back(r);
  }
  return records;
}

std::vector<BenchRecord> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path);
  return parse_csv(in);
}

std::vector<CellSummary> summarize(const std::vector<BenchRecord>& records) {
  std::map<CellKey, std::vector<const BenchRecord*>> cells;
  for (const BenchRecord& r : records) {
    cells[CellKey{r.algorithm, r.n_threads, r.w, r.eps}].push_back(&r);
  }

  std::vector<CellSummary> summaries;
  for (const auto& [key, rows] : cells) {
    CellSummary s;
    s.algorithm = key.algorithm;
    s.n_threads = key.n_threads;
    s.w = key.w;
    s.eps = key.eps;
    s.trials = static_cast<int>(rows.size());

    std::vector<double> walls;
    for (const BenchRecord* r : rows) {
      if (r->outcome != Outcome::kSolved) continue;
      ++s.solved;
      walls.push_back(r->wall_time_s);
      s.mean_cost += r->cost;
      s.mean_edges += static_cast<double>(r->edges_evaluated);
      s.mean_states += static_cast<double>(r->states_expanded);
      s.mean_threads_spawned += static_cast<double>(r->threads_spawned);
    }
    s.solve_rate = s.trials > 0 ? static_cast<double>(s.solved) / s.trials : 0;
    if (s.solved > 0) {
      const double n = s.solved;
      s.mean_cost /= n;
      s.mean_edges /= n;
      s.mean_states /= n;
      s.mean_threads_spawned /= n;
      double sum = 0;
      for (double wsec : walls) sum += wsec;
      s.mean_wall_s = sum / n;
      double var = 0;
      for (double wsec : walls) var += (wsec - s.mean_wall_s) * (wsec - s.mean_wall_s);
      s.stddev_wall_s = std::sqrt(var / n);
      std::sort(walls.begin(), walls.end());
      s.median_wall_s = walls.size() % 2 == 1
                            ? walls[walls.size() / 2]
                            : 0.5 * (walls[walls.size() / 2 - 1] + walls[walls.size() / 2]);
    }
    summaries.push_back(s);
  }

  // Speedup against the (wastar, 1 thread, same w/eps) cell.
  for (CellSummary& s : summaries) {
    for (const CellSummary& base : summaries) {
      if (base.algorithm == Algorithm::kWAStar && base.n_threads == 1 && base.w == s.w &&
          base.eps == s.eps && base.solved > 0 && s.mean_wall_s > 0) {
        s.speedup = base.mean_wall_s / s.mean_wall_s;
      }
    }
  }
  return summaries;
}

void emit_summary_csv(const std::vector<CellSummary>& cells, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_summary_csv: cannot write " + path);
  out << "algorithm,n_threads,w,eps,trials,solved,solve_rate,mean_wall,median_wall,"
         "stddev_wall,mean_cost,mean_edges,mean_states,mean_threads_spawned,speedup\n";
  for (const CellSummary& s : cells) {
    out << algorithm_name(s.algorithm) << ',' << s.n_threads << ',' << fmt_double(s.w) << ','
        << fmt_double(s.eps) << ',' << s.trials << ',' << s.solved << ','
        << fmt_double(s.solve_rate) << ',' << fmt_double(s.mean_wall_s) << ','
        << fmt_double(s.median_wall_s) << ',' << fmt_double(s.stddev_wall_s) << ','
        << fmt_double(s.mean_cost) << ',' << fmt_double(s.mean_edges) << ','
        << fmt_double(s.mean_states) << ',' << fmt_double(s.mean_threads_spawned) << ','
        << (s.speedup ? fmt_double(*s.speedup) : "") << '\n';
  }
}

namespace {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (threads, value)
};

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& y_label, const std::vector<Series>& series) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_plots: cannot write " + path);

  const int width = 720, height = 480;
  const int ml = 70, mr = 170, mt = 40, mb = 50;
  const double plot_w = width - ml - mr;
  const double plot_h = height - mt - mb;

  double xmax = 1, ymax = 0;
  for (const Series& s : series) {
    for (const auto& [x, y] : s.points) {
      xmax = std::max(xmax, x);
      ymax = std::max(ymax, y);
    }
  }
  if (ymax <= 0) ymax = 1;
  ymax *= 1.08;

  auto px = [&](double x) { return ml + plot_w * (x / xmax); };
  auto py = [&](double y) { return mt + plot_h * (1.0 - y / ymax); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                 "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
      << "font-family=\"sans-serif\">" << title << "</text>\n";

  // axes
  out << "<line x1=\"" << ml << "\" y1=\"" << mt + plot_h << "\" x2=\"" << ml + plot_w
      << "\" y2=\"" << mt + plot_h << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
      << mt + plot_h << "\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double yv = ymax * i / 5;
    char label[32];
    std::snprintf(label, sizeof(label), "%.3g", yv);
    out << "<line x1=\"" << ml - 4 << "\" y1=\"" << py(yv) << "\" x2=\"" << ml + plot_w
        << "\" y2=\"" << py(yv) << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
        << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << label
        << "</text>\n";
    const double xv = xmax * i / 5;
    std::snprintf(label, sizeof(label), "%.3g", xv);
    out << "<text x=\"" << px(xv) << "\" y=\"" << mt + plot_h + 18
        << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << label
        << "</text>\n";
  }
  out << "<text x=\"" << ml + plot_w / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">threads</text>\n";
  out << "<text x=\"18\" y=\"" << mt + plot_h / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
      << "transform=\"rotate(-90 18 " << mt + plot_h / 2 << ")\">" << y_label << "</text>\n";

  int ci = 0;
  for (const Series& s : series) {
    const char* color = colors[ci % 8];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : s.points) out << px(x) << ',' << py(y) << ' ';
    out << "\"/>\n";
    for (const auto& [x, y] : s.points) {
      out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"" << color
          << "\"/>\n";
    }
    const int ly = mt + 16 + 18 * ci;
    out << "<line x1=\"" << ml + plot_w + 12 << "\" y1=\"" << ly << "\" x2=\""
        << ml + plot_w + 34 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << ml + plot_w + 40 << "\" y=\"" << ly + 4
        << "\" font-size=\"11\" font-family=\"sans-serif\">" << s.label << "</text>\n";
    ++ci;
  }
  out << "</svg>\n";
  if (!out.good()) throw std::runtime_error("emit_plots: write failed for " + path);
}

}  // namespace

void emit_plots(const std::vector<CellSummary>& cells, const std::string& out_dir) {
  std::map<std::string, Series> speedup_series;
  std::map<std::string, Series> edge_series;

  for (const CellSummary& s : cells) {
    std::ostringstream label;
    label << algorithm_name(s.algorithm) << " w=" << s.w << " eps=" << s.eps;
    if (s.speedup) {
      Series& sp = speedup_series[label.str()];
      sp.label = label.str();
      sp.points.emplace_back(s.n_threads, *s.speedup);
    }
    if (s.solved > 0) {
      Series& ed = edge_series[label.str()];
      ed.label = label.str();
      ed.points.emplace_back(s.n_threads, s.mean_edges);
    }
  }

  auto collect = [](std::map<std::string, Series>& m) {
    std::vector<Series> out;
    for (auto& [_, s] : m) {
      std::sort(s.points.begin(), s.points.end());
      out.push_back(std::move(s));
    }
    return out;
  };

  write_svg_plot(out_dir + "/speedup_vs_threads.svg", "Speedup over wA* (1 thread)",
                 "speedup", collect(speedup_series));
  write_svg_plot(out_dir + "/edges_vs_threads.svg", "Edges evaluated", "edges evaluated",
                 collect(edge_series));
}

}  // namespace parsearch
