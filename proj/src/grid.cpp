#include "parsearch/domains/grid.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include "parsearch/busy_wait.hpp"
#include "parsearch/oracle.hpp"

namespace parsearch {

namespace {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

DelayModel DelayModel::fixed(double ms) {
  DelayModel m;
  m.kind = Kind::kFixed;
  m.fixed_ms = ms;
  return m;
}

DelayModel DelayModel::per_action(std::vector<double> ms) {
  DelayModel m;
  m.kind = Kind::kPerAction;
  m.per_action_ms = std::move(ms);
  return m;
}

DelayModel DelayModel::lognormal(double mu, double sigma, std::uint64_t seed) {
  DelayModel m;
  m.kind = Kind::kLogNormal;
  m.lognormal_mu = mu;
  m.lognormal_sigma = sigma;
  m.seed = seed;
  return m;
}

double DelayModel::delay_ms(StateKey state, ActionId action) const {
  switch (kind) {
    case Kind::kNone:
      return 0;
    case Kind::kFixed:
      return fixed_ms;
    case Kind::kPerAction: {
      const auto idx = static_cast<std::size_t>(action);
      return idx < per_action_ms.size() ? per_action_ms[idx] : 0;
    }
    case Kind::kLogNormal: {
      const std::uint64_t h =
          splitmix64(seed ^ splitmix64(state) ^ splitmix64(0x5851f42d4c957f2dull +
                                                           static_cast<std::uint64_t>(action)));
      // Box-Muller on two uniform halves of the hash.
      const double u1 = (static_cast<double>(h >> 32) + 1.0) / 4294967297.0;
      const double u2 = (static_cast<double>(h & 0xffffffffull) + 0.5) / 4294967296.0;
      const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
      return std::exp(lognormal_mu + lognormal_sigma * z);
    }
  }
  return 0;
}

GoalRegion GoalRegion::rect(int x0, int y0, int x1, int y1) {
  GoalRegion g;
  g.kind = Kind::kRect;
  g.x0 = x0;
  g.y0 = y0;
  g.x1 = x1;
  g.y1 = y1;
  return g;
}

GoalRegion GoalRegion::circle(double cx, double cy, double radius) {
  GoalRegion g;
  g.kind = Kind::kRadius;
  g.cx = cx;
  g.cy = cy;
  g.radius = radius;
  return g;
}

bool GoalRegion::contains(int x, int y) const {
  if (kind == Kind::kRect) {
    return x >= x0 && x <= x1 && y >= y0 && y <= y1;
  }
  const double dx = x - cx;
  const double dy = y - cy;
  return dx * dx + dy * dy <= radius * radius;
}

double GoalRegion::distance(double x, double y) const {
  if (kind == Kind::kRect) {
    const double dx = std::max({static_cast<double>(x0) - x, 0.0, x - static_cast<double>(x1)});
    const double dy = std::max({static_cast<double>(y0) - y, 0.0, y - static_cast<double>(y1)});
    return std::sqrt(dx * dx + dy * dy);
  }
  return std::max(0.0, std::hypot(x - cx, y - cy) - radius);
}

std::vector<Primitive> grid4_primitives() {
  return {
      {1, 0, 0, kCellCost}, {-1, 0, 0, kCellCost}, {0, 1, 0, kCellCost}, {0, -1, 0, kCellCost}};
}

std::vector<Primitive> grid8_primitives() {
  // 1415 > 1000 * sqrt(2), keeping the heuristic admissible.
  const Cost diag = 1415;
  return {{1, 0, 0, kCellCost},  {-1, 0, 0, kCellCost}, {0, 1, 0, kCellCost},
          {0, -1, 0, kCellCost}, {1, 1, 0, diag},       {1, -1, 0, diag},
          {-1, 1, 0, diag},      {-1, -1, 0, diag}};
}

std::vector<Primitive> lattice18_primitives() {
  const Cost diag = 1415;
  const Cost turn = 250;
  return {
      // 8 planar moves
      {1, 0, 0, kCellCost},
      {-1, 0, 0, kCellCost},
      {0, 1, 0, kCellCost},
      {0, -1, 0, kCellCost},
      {1, 1, 0, diag},
      {1, -1, 0, diag},
      {-1, 1, 0, diag},
      {-1, -1, 0, diag},
      // 2 in-place turns
      {0, 0, 1, turn},
      {0, 0, -1, turn},
      // 8 axis moves with a simultaneous turn
      {1, 0, 1, kCellCost + turn},
      {1, 0, -1, kCellCost + turn},
      {-1, 0, 1, kCellCost + turn},
      {-1, 0, -1, kCellCost + turn},
      {0, 1, 1, kCellCost + turn},
      {0, 1, -1, kCellCost + turn},
      {0, -1, 1, kCellCost + turn},
      {0, -1, -1, kCellCost + turn},
  };
}

GridDomain::GridDomain(GridDomainConfig config) : config_(std::move(config)) {
  if (config_.width <= 0 || config_.height <= 0) {
    throw std::invalid_argument("GridDomain: empty grid");
  }
  if (config_.occupancy.size() !=
      static_cast<std::size_t>(config_.width) * static_cast<std::size_t>(config_.height)) {
    throw std::invalid_argument("GridDomain: occupancy size mismatch");
  }
  if (config_.num_headings < 1 || config_.num_headings > 255) {
    throw std::invalid_argument("GridDomain: bad heading count");
  }
  for (const Primitive& p : config_.primitives) {
    if (p.base_cost < kCellCost * std::hypot(p.dx, p.dy)) {
      throw std::invalid_argument("GridDomain: primitive cost below its displacement");
    }
  }
}

StateKey GridDomain::state(int x, int y, int heading) const {
  return static_cast<StateKey>(x) | (static_cast<StateKey>(y) << 20) |
         (static_cast<StateKey>(heading) << 40);
}

std::uint32_t GridDomain::num_actions(StateKey) const {
  return static_cast<std::uint32_t>(config_.primitives.size());
}

namespace {

// Walks every cell touched by the center-to-center segment. Crossing a cell
// corner exactly requires both adjacent cells to be free: a zero-width gap
// is not traversable.
bool segment_blocked(const GridDomainConfig& config, int x, int y, int dx, int dy) {
  const int x_inc = dx > 0 ? 1 : -1;
  const int y_inc = dy > 0 ? 1 : -1;
  const int adx = std::abs(dx) * 2;
  const int ady = std::abs(dy) * 2;
  long long error = std::abs(dx) - std::abs(dy);
  int n = 1 + std::abs(dx) + std::abs(dy);
  while (n > 0) {
    if (config.blocked(x, y)) return true;
    if (error > 0) {
      x += x_inc;
      error -= ady;
      --n;
    } else if (error < 0) {
      y += y_inc;
      error += adx;
      --n;
    } else if (n > 1) {  // exact corner crossing
      if (config.blocked(x + x_inc, y) || config.blocked(x, y + y_inc)) return true;
      x += x_inc;
      y += y_inc;
      error += adx - ady;
      n -= 2;
    } else {
      --n;
    }
  }
  return false;
}

}  // namespace

SuccessorResult GridDomain::evaluate_impl(StateKey state_key, ActionId action) const {
  const auto& prim = config_.primitives[static_cast<std::size_t>(action)];
  const int x = x_of(state_key);
  const int y = y_of(state_key);
  const int heading = heading_of(state_key);

  const int nx = x + prim.dx;
  const int ny = y + prim.dy;
  if (nx < 0 || nx >= config_.width || ny < 0 || ny >= config_.height) {
    return invalid_successor();
  }
  if (segment_blocked(config_, x, y, prim.dx, prim.dy)) return invalid_successor();

  int nheading = (heading + prim.dtheta) % config_.num_headings;
  if (nheading < 0) nheading += config_.num_headings;
  return SuccessorResult{state(nx, ny, nheading), prim.base_cost};
}

SuccessorResult GridDomain::evaluate(StateKey state_key, ActionId action) const {
  const SuccessorResult result = evaluate_impl(state_key, action);
  // Collision checking costs time whether or not the edge is valid.
  busy_wait_ms(config_.delay.delay_ms(state_key, action));
  return result;
}

SuccessorResult GridDomain::evaluate_without_delay(StateKey state_key, ActionId action) const {
  return evaluate_impl(state_key, action);
}

Cost GridDomain::heuristic(StateKey state_key) const {
  return kCellCost * config_.goal.distance(x_of(state_key), y_of(state_key));
}

Cost GridDomain::pairwise_heuristic(StateKey from, StateKey to) const {
  return kCellCost *
         std::hypot(static_cast<double>(x_of(from) - x_of(to)),
                    static_cast<double>(y_of(from) - y_of(to)));
}

bool GridDomain::is_goal(StateKey state_key) const {
  return config_.goal.contains(x_of(state_key), y_of(state_key));
}

std::uint64_t GridDomain::instance_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t v) { h = splitmix64(h ^ v); };
  mix(static_cast<std::uint64_t>(config_.width));
  mix(static_cast<std::uint64_t>(config_.height));
  mix(static_cast<std::uint64_t>(config_.num_headings));
  for (std::size_t i = 0; i < config_.occupancy.size(); i += 64) {
    std::uint64_t word = 0;
    for (std::size_t j = i; j < std::min(i + 64, config_.occupancy.size()); ++j) {
      word = (word << 1) | (config_.occupancy[j] ? 1 : 0);
    }
    mix(word);
  }
  mix(static_cast<std::uint64_t>(config_.goal.kind));
  mix(static_cast<std::uint64_t>(config_.goal.x0) ^ (static_cast<std::uint64_t>(config_.goal.y0) << 16) ^
      (static_cast<std::uint64_t>(config_.goal.x1) << 32) ^ (static_cast<std::uint64_t>(config_.goal.y1) << 48));
  mix(static_cast<std::uint64_t>(config_.goal.cx * 4096) ^ static_cast<std::uint64_t>(config_.goal.cy * 4096) << 20 ^
      static_cast<std::uint64_t>(config_.goal.radius * 4096) << 40);
  for (const Primitive& p : config_.primitives) {
    mix(static_cast<std::uint64_t>(p.dx + 512) ^ (static_cast<std::uint64_t>(p.dy + 512) << 10) ^
        (static_cast<std::uint64_t>(p.dtheta + 512) << 20) ^
        (static_cast<std::uint64_t>(p.base_cost) << 30));
  }
  return h;
}

MapParseError::MapParseError(int line, const std::string& message)
    : std::runtime_error("map parse error at line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::string read_line(std::istream& in, int& line_no) {
  std::string line;
  if (!std::getline(in, line)) {
    throw MapParseError(line_no + 1, "unexpected end of file");
  }
  ++line_no;
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' ')) {
    line.pop_back();
  }
  return line;
}

}  // namespace

OccupancyMap parse_map(std::istream& in) {
  int line_no = 0;
  std::string line = read_line(in, line_no);
  if (line.rfind("type ", 0) != 0) {
    throw MapParseError(line_no, "expected 'type <name>' header");
  }

  auto parse_dim = [&](const std::string& name) {
    const std::string l = read_line(in, line_no);
    std::istringstream ss(l);
    std::string word;
    long value = -1;
    ss >> word >> value;
    if (word != name || value <= 0 || !ss) {
      throw MapParseError(line_no, "expected '" + name + " <positive integer>'");
    }
    return static_cast<int>(value);
  };
  const int height = parse_dim("height");
  const int width = parse_dim("width");

  line = read_line(in, line_no);
  if (line != "map") {
    throw MapParseError(line_no, "expected 'map'");
  }

  OccupancyMap map;
  map.width = width;
  map.height = height;
  map.cells.reserve(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    line = read_line(in, line_no);
    if (static_cast<int>(line.size()) != width) {
      throw MapParseError(line_no, "row has " + std::to_string(line.size()) +
                                       " cells, expected " + std::to_string(width));
    }
    for (char c : line) {
      switch (c) {
        case '.': map.cells.push_back(0); break;
        case '@':
        case 'T': map.cells.push_back(1); break;
        default:
          throw MapParseError(line_no, std::string("unknown cell character '") + c + "'");
      }
    }
  }
  return map;
}

OccupancyMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_map: cannot open " + path);
  }
  return parse_map(in);
}

RandomGridInstance random_grid(std::uint64_t seed, int width, int height,
                               double obstacle_density, std::vector<Primitive> primitives,
                               int num_headings, double goal_radius, bool require_solvable,
                               DelayModel delay) {
  if (obstacle_density < 0 || obstacle_density >= 1) {
    throw std::invalid_argument("random_grid: density must be in [0, 1)");
  }
  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int map_attempt = 0; map_attempt < 16; ++map_attempt) {
    GridDomainConfig config;
    config.width = width;
    config.height = height;
    config.num_headings = num_headings;
    config.primitives = primitives;
    config.delay = delay;
    config.occupancy.resize(static_cast<std::size_t>(width) * height);
    std::vector<std::pair<int, int>> free_cells;
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const bool blocked = unit(rng) < obstacle_density;
        config.occupancy[static_cast<std::size_t>(y) * width + x] = blocked ? 1 : 0;
        if (!blocked) free_cells.emplace_back(x, y);
      }
    }
    if (free_cells.size() < 2) continue;

    std::uniform_int_distribution<std::size_t> pick(0, free_cells.size() - 1);
    for (int attempt = 0; attempt < 32; ++attempt) {
      const auto [gx, gy] = free_cells[pick(rng)];
      const auto [sx, sy] = free_cells[pick(rng)];
      config.goal = goal_radius > 0
                        ? GoalRegion::circle(gx, gy, goal_radius)
                        : GoalRegion::cell(gx, gy);
      if (config.goal.contains(sx, sy)) continue;

      RandomGridInstance instance;
      instance.config = config;
      instance.start_x = sx;
      instance.start_y = sy;
      instance.goal_x = gx;
      instance.goal_y = gy;

      GridDomain domain(config);
      instance.start = domain.state(sx, sy, 0);
      if (!require_solvable) return instance;
      const OracleResult reach =
          oracle_shortest_paths(domain, instance.start, /*exhaustive=*/false);
      if (reach.reachable()) return instance;
    }
  }
  throw std::runtime_error("random_grid: no solvable instance found");
}

}  // namespace parsearch
