#include "medianforge/cubulation.hpp"

#include <algorithm>
#include <unordered_map>

#include "medianforge/errors.hpp"
#include "medianforge/generators.hpp"

namespace medianforge {

namespace {

bool same_wall(const Wallspace::Wall& a, const Wallspace::Wall& b) {
  return (a.block0 == b.block0 && a.block1 == b.block1) || (a.block0 == b.block1 && a.block1 == b.block0);
}

const boost::dynamic_bitset<>& chosen(const Wallspace& ws, std::size_t wall, std::uint8_t side) {
  return side == 0 ? ws.walls()[wall].block0 : ws.walls()[wall].block1;
}

}  // namespace

Wallspace::Wallspace(std::vector<std::string> points,
                     const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& walls)
    : points_(std::move(points)) {
  if (points_.empty()) throw InputError("wallspace has no points");
  std::vector<std::string> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw InputError("duplicate point '" + *dup + "'");
  }
  const std::size_t n = points_.size();
  for (std::size_t w = 0; w < walls.size(); ++w) {
    Wall wall{boost::dynamic_bitset<>(n), boost::dynamic_bitset<>(n)};
    auto fill = [&](const std::vector<std::string>& names, boost::dynamic_bitset<>& block) {
      if (names.empty()) throw InputError("wall " + std::to_string(w) + " has an empty block");
      for (const auto& name : names) {
        const std::size_t p = point_index(name);
        if (wall.block0.test(p) || wall.block1.test(p)) {
          throw InputError("point '" + name + "' appears twice in wall " + std::to_string(w));
        }
        block.set(p);
      }
    };
    fill(walls[w].first, wall.block0);
    fill(walls[w].second, wall.block1);
    if ((wall.block0 | wall.block1).count() != n) {
      throw InputError("wall " + std::to_string(w) + " does not cover every point");
    }
    for (const auto& earlier : walls_) {
      if (same_wall(earlier, wall)) throw InputError("wall " + std::to_string(w) + " repeats an earlier wall");
    }
    walls_.push_back(std::move(wall));
  }
}

std::size_t Wallspace::point_index(const std::string& name) const {
  auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) throw InputError("unknown point '" + name + "'");
  return static_cast<std::size_t>(it - points_.begin());
}

std::pair<std::vector<std::string>, std::vector<std::string>> Wallspace::wall_names(std::size_t w) const {
  std::pair<std::vector<std::string>, std::vector<std::string>> out;
  for (std::size_t p = 0; p < points_.size(); ++p) {
    (walls_[w].block0.test(p) ? out.first : out.second).push_back(points_[p]);
  }
  return out;
}

bool Wallspace::separates(std::size_t wall, std::size_t p, std::size_t q) const {
  return walls_[wall].block0.test(p) != walls_[wall].block0.test(q);
}

bool operator==(const Wallspace& a, const Wallspace& b) {
  if (a.points_ != b.points_ || a.walls_.size() != b.walls_.size()) return false;
  for (std::size_t w = 0; w < a.walls_.size(); ++w) {
    if (a.walls_[w].block0 != b.walls_[w].block0 || a.walls_[w].block1 != b.walls_[w].block1) return false;
  }
  return true;
}

bool is_consistent(const Wallspace& ws, const Orientation& o) {
  if (o.size() != ws.walls().size()) throw InputError("orientation length does not match wall count");
  for (std::size_t i = 0; i < o.size(); ++i) {
    for (std::size_t j = i + 1; j < o.size(); ++j) {
      if (!chosen(ws, i, o[i]).intersects(chosen(ws, j, o[j]))) return false;
    }
  }
  return true;
}

Orientation principal_orientation(const Wallspace& ws, std::size_t point) {
  if (point >= ws.points().size()) throw InputError("unknown point index");
  Orientation o(ws.walls().size());
  for (std::size_t w = 0; w < o.size(); ++w) o[w] = ws.walls()[w].block0.test(point) ? 0 : 1;
  return o;
}

std::string orientation_name(const Orientation& o) {
  std::string s(o.size(), '0');
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (o[i]) s[i] = '1';
  }
  return s;
}

DualGraph dualize(const Wallspace& ws, std::uint64_t orientation_ceiling) {
  const std::size_t walls = ws.walls().size();
  std::vector<Orientation> found;
  Orientation current(walls);
  auto search = [&](auto&& self, std::size_t w) -> void {
    if (w == walls) {
      if (found.size() >= orientation_ceiling) {
        throw ResourceError("more than " + std::to_string(orientation_ceiling) + " consistent orientations");
      }
      found.push_back(current);
      return;
    }
    for (std::uint8_t side = 0; side < 2; ++side) {
      const auto& block = chosen(ws, w, side);
      bool ok = true;
      for (std::size_t prev = 0; prev < w && ok; ++prev) ok = block.intersects(chosen(ws, prev, current[prev]));
      if (!ok) continue;
      current[w] = side;
      self(self, w + 1);
    }
  };
  search(search, 0);

  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> names;
  for (const auto& o : found) {
    index.emplace(orientation_name(o), names.size());
    names.push_back(orientation_name(o));
  }
  std::vector<NamedEdge> edges;
  for (const auto& name : names) {
    std::string flipped = name;
    for (std::size_t w = 0; w < walls; ++w) {
      flipped[w] = name[w] == '0' ? '1' : '0';
      if (flipped > name && index.count(flipped)) edges.emplace_back(name, flipped);
      flipped[w] = name[w];
    }
  }

  std::optional<Graph> graph;
  try {
    graph.emplace(names, edges);
  } catch (const InputError& e) {
    throw InternalError(std::string("dual graph is malformed: ") + e.what());
  }
  DualGraph dual{std::move(*graph), {}};
  for (std::size_t p = 0; p < ws.points().size(); ++p) {
    dual.point_vertex.push_back(dual.graph.index(orientation_name(principal_orientation(ws, p))));
  }
  return dual;
}

WallDistanceReport wall_distance_check(const Wallspace& ws, const DualGraph& dual) {
  WallDistanceReport report;
  const std::size_t n = ws.points().size();
  for (std::size_t p = 0; p < n; ++p) {
    const auto dist = dual.graph.bfs(dual.point_vertex[p]);
    for (std::size_t q = p; q < n; ++q) {
      int separating = 0;
      for (std::size_t w = 0; w < ws.walls().size(); ++w) separating += ws.separates(w, p, q) ? 1 : 0;
      const int d = dist[dual.point_vertex[q]];
      ++report.pairs_checked;
      if (d != separating) report.violations.push_back({p, q, d, separating});
    }
  }
  return report;
}

Wallspace random_wallspace(std::mt19937_64& rng, std::size_t points, std::size_t walls) {
  if (points < 2) throw InputError("random wallspace needs at least two points");
  std::vector<std::string> names;
  for (std::size_t p = 0; p < points; ++p) names.push_back("p" + std::to_string(p));
  std::vector<boost::dynamic_bitset<>> picked;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> walls_by_name;
  for (std::size_t attempt = 0; attempt < 64 * walls && walls_by_name.size() < walls; ++attempt) {
    boost::dynamic_bitset<> side(points);
    side.set(0);  // block0 holds p0, which makes the bipartition canonical
    for (std::size_t p = 1; p < points; ++p) side[p] = uniform_below(rng, 2) == 1;
    if (side.all()) continue;
    if (std::find(picked.begin(), picked.end(), side) != picked.end()) continue;
    picked.push_back(side);
    std::pair<std::vector<std::string>, std::vector<std::string>> wall;
    for (std::size_t p = 0; p < points; ++p) (side.test(p) ? wall.first : wall.second).push_back(names[p]);
    walls_by_name.push_back(std::move(wall));
  }
  return Wallspace(std::move(names), walls_by_name);
}

}  // namespace medianforge
