#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "medianforge/graph.hpp"

namespace medianforge {

/// Finite set of points with walls (bipartitions into two nonempty blocks).
class Wallspace {
 public:
  struct Wall {
    boost::dynamic_bitset<> block0;  // one bit per point
    boost::dynamic_bitset<> block1;
  };

  /// Walls are given as block pairs of point names. Throws InputError on
  /// unknown or duplicate points, blocks that do not partition the points,
  /// empty blocks, or repeated walls (as unordered block pairs).
  Wallspace(std::vector<std::string> points,
            const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& walls);

  const std::vector<std::string>& points() const { return points_; }
  const std::vector<Wall>& walls() const { return walls_; }
  std::size_t point_index(const std::string& name) const;

  /// Block names of a wall, each sorted by point index.
  std::pair<std::vector<std::string>, std::vector<std::string>> wall_names(std::size_t w) const;

  bool separates(std::size_t wall, std::size_t p, std::size_t q) const;

  friend bool operator==(const Wallspace& a, const Wallspace& b);

 private:
  std::vector<std::string> points_;
  std::vector<Wall> walls_;
};

/// One chosen block (0 or 1) per wall.
using Orientation = std::vector<std::uint8_t>;

/// Every two chosen blocks intersect.
bool is_consistent(const Wallspace& ws, const Orientation& o);

/// Orientation toward a point: each wall picks the block containing it.
Orientation principal_orientation(const Wallspace& ws, std::size_t point);

/// Vertex name of an orientation: one '0'/'1' character per wall.
std::string orientation_name(const Orientation& o);

constexpr std::uint64_t kDefaultOrientationCeiling = std::uint64_t{1} << 18;

struct DualGraph {
  Graph graph;
  std::vector<Vertex> point_vertex;  // principal orientation of each point
};

/// Dual median graph: consistent orientations, adjacent when they differ on
/// exactly one wall. Throws ResourceError above `orientation_ceiling`
/// orientations and InternalError if the result is disconnected.
DualGraph dualize(const Wallspace& ws, std::uint64_t orientation_ceiling = kDefaultOrientationCeiling);

struct WallDistanceViolation {
  std::size_t p;
  std::size_t q;
  int graph_distance;
  int separating_walls;
};

struct WallDistanceReport {
  std::size_t pairs_checked = 0;
  std::vector<WallDistanceViolation> violations;
};

/// Compares dual-graph distance with the number of separating walls for
/// every pair of points.
WallDistanceReport wall_distance_check(const Wallspace& ws, const DualGraph& dual);

/// Random wallspace on `points` points ("p0".."p{n-1}") with up to `walls`
/// distinct walls drawn as uniform nontrivial bipartitions.
Wallspace random_wallspace(std::mt19937_64& rng, std::size_t points, std::size_t walls);

}  // namespace medianforge
