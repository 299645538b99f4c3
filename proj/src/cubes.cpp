#include "medianforge/cubes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "medianforge/errors.hpp"

namespace medianforge {

namespace {

// Hypercube coordinates of `vertices` (parallel array), or nullopt when they do
// not induce a hypercube. Coordinate i of u is set when u is closer to the
// i-th neighbor of vertices[0] than to vertices[0] itself.
std::optional<std::vector<std::uint32_t>> cube_labels(const Graph& g, const std::vector<Vertex>& vertices) {
  const std::size_t size = vertices.size();
  if (size == 0 || !std::has_single_bit(size) || size > (std::size_t{1} << 24)) return std::nullopt;
  const int dim = std::countr_zero(size);
  if (size == 1) return std::vector<std::uint32_t>{0};

  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  auto local = [&](Vertex v) -> std::optional<std::size_t> {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - sorted.begin());
  };

  std::vector<std::vector<std::size_t>> adj(size);
  std::size_t edge_count = 0;
  for (std::size_t i = 0; i < size; ++i) {
    for (Vertex w : g.neighbors(sorted[i])) {
      if (auto j = local(w)) {
        adj[i].push_back(*j);
        if (i < *j) ++edge_count;
      }
    }
    if (adj[i].size() != static_cast<std::size_t>(dim)) return std::nullopt;
  }
  if (edge_count != static_cast<std::size_t>(dim) * size / 2) return std::nullopt;

  auto bfs = [&](std::size_t s) {
    std::vector<int> d(size, -1);
    std::vector<std::size_t> queue{s};
    d[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (auto w : adj[queue[h]]) {
        if (d[w] < 0) {
          d[w] = d[queue[h]] + 1;
          queue.push_back(w);
        }
      }
    }
    return d;
  };

  const std::size_t origin = *local(vertices[0]);
  const auto d0 = bfs(origin);
  if (std::find(d0.begin(), d0.end(), -1) != d0.end()) return std::nullopt;
  std::vector<std::uint32_t> label(size, 0);
  for (int axis = 0; axis < dim; ++axis) {
    const auto di = bfs(adj[origin][static_cast<std::size_t>(axis)]);
    for (std::size_t u = 0; u < size; ++u) {
      if (di[u] < d0[u]) label[u] |= 1U << axis;
    }
  }
  std::vector<char> used(size, 0);
  for (auto l : label) {
    if (used[l]) return std::nullopt;
    used[l] = 1;
  }
  for (std::size_t u = 0; u < size; ++u) {
    for (auto w : adj[u]) {
      if (std::popcount(label[u] ^ label[w]) != 1) return std::nullopt;
    }
  }
  std::vector<std::uint32_t> out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = label[*local(vertices[i])];
  return out;
}

// Sorted vertex sets of the 2*dim facets of a cube.
std::vector<std::vector<Vertex>> facets(const Graph& g, const Cube& cube) {
  std::vector<std::vector<Vertex>> out;
  if (cube.dimension == 0) return out;
  const auto labels = cube_labels(g, cube.vertices);
  if (!labels) throw InputError("cell is not a cube");
  for (int axis = 0; axis < cube.dimension; ++axis) {
    for (std::uint32_t side = 0; side < 2; ++side) {
      std::vector<Vertex> face;
      for (std::size_t i = 0; i < cube.vertices.size(); ++i) {
        if (((*labels)[i] >> axis & 1U) == side) face.push_back(cube.vertices[i]);
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

}  // namespace

bool induces_cube(const Graph& g, const std::vector<Vertex>& vertices) {
  return cube_labels(g, vertices).has_value();
}

CubeComplex::CubeComplex(Graph base, std::vector<std::vector<Cube>> cells)
    : base_(std::move(base)), cells_(std::move(cells)) {
  while (!cells_.empty() && cells_.back().empty()) cells_.pop_back();
  if (cells_.empty() || cells_[0].size() != base_.order()) {
    throw InputError("dimension-0 cells must be exactly the vertices");
  }
  for (Vertex v = 0; v < base_.order(); ++v) {
    if (cells_[0][v] != Cube{0, {v}}) throw InputError("dimension-0 cells must be exactly the vertices");
  }
  if (base_.size() > 0) {
    if (cells_.size() < 2 || cells_[1].size() != base_.size()) {
      throw InputError("dimension-1 cells must be exactly the edges");
    }
    for (std::size_t e = 0; e < base_.size(); ++e) {
      const Edge& edge = base_.edges()[e];
      if (cells_[1][e] != Cube{1, {edge.u, edge.v}}) throw InputError("dimension-1 cells must be exactly the edges");
    }
  } else if (cells_.size() > 1) {
    throw InputError("edgeless graph cannot carry higher cells");
  }
  for (std::size_t k = 2; k < cells_.size(); ++k) {
    auto& layer = cells_[k];
    std::sort(layer.begin(), layer.end());
    if (std::adjacent_find(layer.begin(), layer.end()) != layer.end()) throw InputError("repeated cell");
    for (auto& cell : layer) {
      if (cell.dimension != static_cast<int>(k) || !std::is_sorted(cell.vertices.begin(), cell.vertices.end()) ||
          !induces_cube(base_, cell.vertices)) {
        throw InputError("cell of dimension " + std::to_string(k) + " is not an induced cube");
      }
    }
  }
  for (std::size_t k = 3; k < cells_.size(); ++k) {
    for (const auto& cell : cells_[k]) {
      for (auto& face : facets(base_, cell)) {
        if (!contains(Cube{static_cast<int>(k) - 1, std::move(face)})) {
          throw InputError("complex is not closed under taking faces");
        }
      }
    }
  }
}

const std::vector<Cube>& CubeComplex::cells(int dimension) const {
  static const std::vector<Cube> none;
  if (dimension < 0 || dimension >= static_cast<int>(cells_.size())) return none;
  return cells_[static_cast<std::size_t>(dimension)];
}

std::vector<std::uint64_t> CubeComplex::f_vector() const {
  std::vector<std::uint64_t> f;
  for (const auto& layer : cells_) f.push_back(layer.size());
  return f;
}

std::int64_t CubeComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    const auto count = static_cast<std::int64_t>(cells_[k].size());
    chi += (k % 2 == 0) ? count : -count;
  }
  return chi;
}

bool CubeComplex::contains(const Cube& c) const {
  const auto& layer = cells(c.dimension);
  return std::binary_search(layer.begin(), layer.end(), c);
}

CubeComplex CubeComplex::without(const Cube& cell) const {
  if (cell.dimension < 2) throw InputError("only cells of dimension >= 2 can be removed");
  if (!contains(cell)) throw InputError("cell not in complex");
  for (const auto& up : cells(cell.dimension + 1)) {
    if (std::includes(up.vertices.begin(), up.vertices.end(), cell.vertices.begin(), cell.vertices.end())) {
      throw InputError("cell has cofaces");
    }
  }
  auto cells = cells_;
  auto& layer = cells[static_cast<std::size_t>(cell.dimension)];
  layer.erase(std::find(layer.begin(), layer.end(), cell));
  return CubeComplex(base_, std::move(cells));
}

CubeComplex enumerate_cubes(const Graph& g, std::uint64_t cell_ceiling) {
  // Cubes carried with corner order: corner[mask] has coordinates `mask`.
  using Corners = std::vector<Vertex>;
  std::uint64_t total = g.order();
  auto guard = [&](std::uint64_t add) {
    total += add;
    if (total > cell_ceiling) {
      throw ResourceError("cube enumeration exceeded the ceiling of " + std::to_string(cell_ceiling) + " cells");
    }
  };
  if (total > cell_ceiling) guard(0);

  std::vector<std::vector<Cube>> cells(1);
  std::vector<Corners> frontier;
  for (Vertex v = 0; v < g.order(); ++v) {
    cells[0].push_back(Cube{0, {v}});
    frontier.push_back({v});
  }

  std::vector<Vertex> common;
  for (int dim = 1; !frontier.empty(); ++dim) {
    std::map<std::vector<Vertex>, Corners> found;
    for (const Corners& base : frontier) {
      const std::size_t half = base.size();
      auto inside = [&](Vertex v) { return std::find(base.begin(), base.end(), v) != base.end(); };
      Corners image(half);
      // Depth-first assignment of the parallel copy, mask by mask.
      auto extend = [&](auto&& self, std::size_t mask) -> void {
        if (mask == half) {
          Corners corners = base;
          corners.insert(corners.end(), image.begin(), image.end());
          std::vector<Vertex> key = corners;
          std::sort(key.begin(), key.end());
          if (found.count(key)) return;
          std::size_t edges = 0;
          for (std::size_t i = 0; i < key.size(); ++i) {
            for (Vertex w : g.neighbors(key[i])) {
              if (w > key[i] && std::binary_search(key.begin(), key.end(), w)) ++edges;
            }
          }
          if (edges != static_cast<std::size_t>(dim) * key.size() / 2) return;
          guard(1);
          found.emplace(std::move(key), std::move(corners));
          return;
        }
        const std::size_t low = mask & (~mask + 1);
        const Vertex prev = image[mask ^ low];
        common.clear();
        std::set_intersection(g.neighbors(base[mask]).begin(), g.neighbors(base[mask]).end(),
                              g.neighbors(prev).begin(), g.neighbors(prev).end(), std::back_inserter(common));
        const std::vector<Vertex> options = common;
        for (Vertex candidate : options) {
          if (inside(candidate) || std::find(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(mask),
                                             candidate) != image.begin() + static_cast<std::ptrdiff_t>(mask)) {
            continue;
          }
          bool fits = true;
          for (std::size_t rest = mask ^ low; rest != 0; rest &= rest - 1) {
            const std::size_t bit = rest & (~rest + 1);
            if (!g.adjacent(candidate, image[mask ^ bit])) {
              fits = false;
              break;
            }
          }
          if (!fits) continue;
          image[mask] = candidate;
          self(self, mask + 1);
        }
      };
      for (Vertex w : g.neighbors(base[0])) {
        if (inside(w)) continue;
        image[0] = w;
        extend(extend, 1);
      }
    }
    if (found.empty()) break;
    cells.emplace_back();
    frontier.clear();
    for (auto& [key, corners] : found) {
      cells.back().push_back(Cube{dim, key});
      frontier.push_back(std::move(corners));
    }
  }

  // Enumeration already lists edges in edge order; the constructor re-checks.
  return CubeComplex(g, std::move(cells));
}

std::vector<MaximalCube> maximal_cubes(const CubeComplex& c, const Hyperplanes& h) {
  const Graph& g = c.base();
  std::set<std::vector<Vertex>> covered;
  for (int k = 1; k <= c.dimension(); ++k) {
    for (const auto& cell : c.cells(k)) {
      for (auto& face : facets(g, cell)) covered.insert(std::move(face));
    }
  }
  std::vector<MaximalCube> out;
  for (int k = 0; k <= c.dimension(); ++k) {
    for (const auto& cell : c.cells(k)) {
      if (covered.count(cell.vertices)) continue;
      std::set<std::size_t> planes;
      for (std::size_t i = 0; i < cell.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < cell.vertices.size(); ++j) {
          if (auto e = g.edge_index(cell.vertices[i], cell.vertices[j])) planes.insert(h.of_edge(*e));
        }
      }
      out.push_back(MaximalCube{cell, {planes.begin(), planes.end()}});
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> maximal_transverse_families(const Hyperplanes& h) {
  const std::size_t n = h.count();
  std::vector<boost::dynamic_bitset<>> adj(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (h.transverse(i, j)) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> clique;
  // Bron–Kerbosch with pivoting.
  auto expand = [&](auto&& self, boost::dynamic_bitset<> candidates, boost::dynamic_bitset<> excluded) -> void {
    if (candidates.none() && excluded.none()) {
      auto family = clique;
      std::sort(family.begin(), family.end());
      out.push_back(std::move(family));
      return;
    }
    const auto pool = candidates | excluded;
    std::size_t pivot = pool.find_first();
    std::size_t best = 0;
    for (auto u = pool.find_first(); u != boost::dynamic_bitset<>::npos; u = pool.find_next(u)) {
      const auto hits = (candidates & adj[u]).count();
      if (hits > best) {
        best = hits;
        pivot = u;
      }
    }
    const auto branch = candidates - adj[pivot];
    for (auto v = branch.find_first(); v != boost::dynamic_bitset<>::npos; v = branch.find_next(v)) {
      clique.push_back(v);
      self(self, candidates & adj[v], excluded & adj[v]);
      clique.pop_back();
      candidates.reset(v);
      excluded.set(v);
    }
  };
  // with no hyperplanes the empty family is the maximal one, matching the single vertex
  boost::dynamic_bitset<> all(n);
  all.set();
  expand(expand, all, boost::dynamic_bitset<>(n));
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialLink vertex_link(const CubeComplex& c, Vertex v) {
  const Graph& g = c.base();
  if (v >= g.order()) throw InputError("unknown vertex");
  SimplicialLink link{v, {g.neighbors(v).begin(), g.neighbors(v).end()}, {}};
  for (int k = 1; k <= c.dimension(); ++k) {
    for (const auto& cell : c.cells(k)) {
      if (!std::binary_search(cell.vertices.begin(), cell.vertices.end(), v)) continue;
      std::vector<Vertex> simplex;
      for (Vertex u : cell.vertices) {
        if (g.adjacent(u, v)) simplex.push_back(u);
      }
      link.simplices.push_back(std::move(simplex));
    }
  }
  std::sort(link.simplices.begin(), link.simplices.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return link;
}

FlagResult is_flag(const SimplicialLink& link) {
  const std::set<std::vector<Vertex>> simplices(link.simplices.begin(), link.simplices.end());
  std::map<Vertex, std::set<Vertex>> adj;
  for (const auto& s : link.simplices) {
    if (s.size() == 2) {
      adj[s[0]].insert(s[1]);
      adj[s[1]].insert(s[0]);
    }
  }
  // Every clique extends a smaller clique by a larger vertex, so it suffices
  // to extend simplices one vertex at a time.
  for (const auto& s : link.simplices) {
    if (s.size() < 2) continue;
    for (Vertex u : adj[s.back()]) {
      if (u <= s.back()) continue;
      const bool clique = std::all_of(s.begin(), s.end(), [&](Vertex x) { return adj[x].count(u) > 0; });
      if (!clique) continue;
      auto bigger = s;
      bigger.push_back(u);
      if (!simplices.count(bigger)) return FlagResult{false, bigger};
    }
  }
  return {};
}

std::string to_string(TriState t) {
  switch (t) {
    case TriState::Yes:
      return "yes";
    case TriState::No:
      return "no";
    case TriState::Unknown:
      break;
  }
  return "unknown";
}

}  // namespace medianforge
