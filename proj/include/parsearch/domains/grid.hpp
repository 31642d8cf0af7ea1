#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "parsearch/search_space.hpp"
#include "parsearch/types.hpp"

namespace parsearch {

/// One lattice motion: displacement in cells, heading change in bins, and the
/// base traversal cost. Costs are integer-valued so path sums are exact.
struct Primitive {
  int dx = 0;
  int dy = 0;
  int dtheta = 0;
  Cost base_cost = 0;
};

/// Cost scale: one cell of straight-line motion.
inline constexpr Cost kCellCost = 1000;

/// 4-connected planar moves, cost 1000 each.
std::vector<Primitive> grid4_primitives();

/// 8-connected planar moves, cost 1000 straight / 1415 diagonal (kept above
/// the Euclidean displacement so the Euclidean heuristic stays admissible).
std::vector<Primitive> grid8_primitives();

/// The 18-primitive lattice set for (x, y, theta) states:
///   8 planar moves with no heading change,
///   2 in-place turns (+/- one heading bin, cost 250),
///   8 axis moves combined with a +/- turn (cost 1250).
std::vector<Primitive> lattice18_primitives();

/// Synthetic edge-evaluation expense. The delay burns CPU in a calibrated
/// busy loop (a sleep would let the scheduler overlap evaluations for free
/// and exaggerate parallel speedup).
struct DelayModel {
  enum class Kind { kNone, kFixed, kPerAction, kLogNormal };

  Kind kind = Kind::kNone;
  double fixed_ms = 0;
  std::vector<double> per_action_ms;
  double lognormal_mu = 0;     // of ln(delay in ms)
  double lognormal_sigma = 0;
  std::uint64_t seed = 0;      // lognormal draws hash (seed, state, action)

  static DelayModel none() { return {}; }
  static DelayModel fixed(double ms);
  static DelayModel per_action(std::vector<double> ms);
  static DelayModel lognormal(double mu, double sigma, std::uint64_t seed);

  /// Delay in milliseconds for one edge. Deterministic and schedule
  /// independent: lognormal draws depend only on (seed, state, action).
  double delay_ms(StateKey state, ActionId action) const;
};

struct GoalRegion {
  enum class Kind { kRect, kRadius };

  Kind kind = Kind::kRect;
  // kRect: inclusive cell rectangle.
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  // kRadius: cells within `radius` of (cx, cy).
  double cx = 0, cy = 0, radius = 0;

  static GoalRegion cell(int x, int y) { return rect(x, y, x, y); }
  static GoalRegion rect(int x0, int y0, int x1, int y1);
  static GoalRegion circle(double cx, double cy, double radius);

  bool contains(int x, int y) const;
  /// Euclidean distance from (x, y) to the region, 0 inside.
  double distance(double x, double y) const;
};

struct GridDomainConfig {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> occupancy;  // row-major, nonzero = blocked
  int num_headings = 1;                 // 1 => planar 2D
  std::vector<Primitive> primitives;
  GoalRegion goal;
  DelayModel delay;

  bool blocked(int x, int y) const {
    return occupancy[static_cast<std::size_t>(y) * width + x] != 0;
  }
};

/// Grid navigation domain. States are (x, y, heading) packed into a StateKey;
/// evaluating a primitive collision-checks every cell its segment touches and
/// then runs the configured synthetic delay. Instances are immutable, so
/// concurrent evaluation needs no synchronization.
class GridDomain : public SearchSpace {
 public:
  explicit GridDomain(GridDomainConfig config);

  StateKey state(int x, int y, int heading = 0) const;
  int x_of(StateKey key) const { return static_cast<int>(key & 0xfffff); }
  int y_of(StateKey key) const { return static_cast<int>((key >> 20) & 0xfffff); }
  int heading_of(StateKey key) const { return static_cast<int>((key >> 40) & 0xff); }

  std::uint32_t num_actions(StateKey state) const override;
  SuccessorResult evaluate(StateKey state, ActionId action) const override;
  SuccessorResult evaluate_without_delay(StateKey state, ActionId action) const override;
  Cost heuristic(StateKey state) const override;
  Cost pairwise_heuristic(StateKey from, StateKey to) const override;
  bool is_goal(StateKey state) const override;

  const GridDomainConfig& config() const { return config_; }

  /// Digest of the occupancy map, goal and primitive set; used to assert
  /// that benchmark cells see identical instances.
  std::uint64_t instance_hash() const;

 private:
  SuccessorResult evaluate_impl(StateKey state, ActionId action) const;

  GridDomainConfig config_;
};

/// Parse error with the offending 1-based line number.
class MapParseError : public std::runtime_error {
 public:
  MapParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct OccupancyMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> cells;
};

/// Reads the grid-map text format:
///   type octile / height H / width W / map / H rows of {'.', '@', 'T'}
/// '@' and 'T' are blocked, '.' is free.
OccupancyMap load_map(const std::string& path);
OccupancyMap parse_map(std::istream& in);

struct RandomGridInstance {
  GridDomainConfig config;
  StateKey start = 0;  // heading 0
  int start_x = 0, start_y = 0;
  int goal_x = 0, goal_y = 0;
};

/// Deterministic random instance: obstacles from `seed`, start/goal sampled
/// from free cells. With `require_solvable`, instances are rejection-sampled
/// until a ground-truth search confirms the goal is reachable; gives up after
/// a bounded number of attempts.
RandomGridInstance random_grid(std::uint64_t seed, int width, int height,
                               double obstacle_density,
                               std::vector<Primitive> primitives,
                               int num_headings = 1, double goal_radius = 0,
                               bool require_solvable = true,
                               DelayModel delay = DelayModel::none());

}  // namespace parsearch
