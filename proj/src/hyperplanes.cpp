#include "medianforge/hyperplanes.hpp"

#include <algorithm>
#include <numeric>

#include "medianforge/errors.hpp"

namespace medianforge {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Component labels of g with the edges flagged in `removed` deleted.
std::size_t label_components(const Graph& g, const std::vector<char>& removed,
                             std::vector<std::size_t>& label) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  label.assign(g.order(), unset);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != unset) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (label[w] != unset || removed[*g.edge_index(u, w)]) continue;
        label[w] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return count;
}

}  // namespace

Hyperplanes::Hyperplanes(Graph g) : graph_(std::move(g)) {
  const Graph& gr = graph_;
  DisjointSets classes(gr.size());

  std::vector<Vertex> common;
  for (Vertex a = 0; a < gr.order(); ++a) {
    const auto nbrs = gr.neighbors(a);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const Vertex b = nbrs[i];
        const Vertex d = nbrs[j];
        common.clear();
        std::set_intersection(gr.neighbors(b).begin(), gr.neighbors(b).end(), gr.neighbors(d).begin(),
                              gr.neighbors(d).end(), std::back_inserter(common));
        for (Vertex c : common) {
          if (c <= a) continue;  // each square is met once per diagonal
          classes.unite(*gr.edge_index(a, b), *gr.edge_index(d, c));
          classes.unite(*gr.edge_index(a, d), *gr.edge_index(b, c));
        }
      }
    }
  }

  // Roots are the least edge of each class, so walking edges in order visits
  // classes in id order.
  std::vector<std::size_t> root_to_plane(gr.size(), static_cast<std::size_t>(-1));
  edge_class_.resize(gr.size());
  for (std::size_t e = 0; e < gr.size(); ++e) {
    const std::size_t root = classes.find(e);
    if (root_to_plane[root] == static_cast<std::size_t>(-1)) {
      root_to_plane[root] = planes_.size();
      planes_.push_back(Hyperplane{e, {}, VertexSet(), VertexSet()});
    }
    edge_class_[e] = root_to_plane[root];
    planes_[edge_class_[e]].edges.push_back(e);
  }

  std::vector<char> removed(gr.size(), 0);
  std::vector<std::size_t> label;
  for (auto& plane : planes_) {
    for (auto e : plane.edges) removed[e] = 1;
    const std::size_t components = label_components(gr, removed, label);
    for (auto e : plane.edges) removed[e] = 0;
    const Edge& id = gr.edges()[plane.id];
    if (components != 2) {
      throw HalfspaceError("removing the class of edge {" + gr.name(id.u) + ", " + gr.name(id.v) +
                           "} leaves " + std::to_string(components) + " component(s)");
    }
    plane.side_a = gr.empty_set();
    plane.side_b = gr.empty_set();
    const std::size_t a_label = label[id.u];
    for (Vertex v = 0; v < gr.order(); ++v) (label[v] == a_label ? plane.side_a : plane.side_b).set(v);
    for (auto e : plane.edges) {
      const Edge& edge = gr.edges()[e];
      if (label[edge.u] == label[edge.v]) {
        throw HalfspaceError("edge {" + gr.name(edge.u) + ", " + gr.name(edge.v) +
                             "} does not cross its own hyperplane");
      }
    }
  }
}

std::size_t Hyperplanes::of_edge(Vertex u, Vertex v) const {
  auto e = graph_.edge_index(u, v);
  if (!e) throw InputError("no edge {" + graph_.name(u) + ", " + graph_.name(v) + "}");
  return edge_class_[*e];
}

bool Hyperplanes::separates(std::size_t plane, Vertex x, Vertex y) const {
  return planes_[plane].side_a.test(x) != planes_[plane].side_a.test(y);
}

std::vector<std::size_t> Hyperplanes::separating(Vertex x, Vertex y) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < planes_.size(); ++i) {
    if (separates(i, x, y)) out.push_back(i);
  }
  return out;
}

bool Hyperplanes::transverse(std::size_t i, std::size_t j) const {
  const auto& p = planes_[i];
  const auto& q = planes_[j];
  return p.side_a.intersects(q.side_a) && p.side_a.intersects(q.side_b) &&
         p.side_b.intersects(q.side_a) && p.side_b.intersects(q.side_b);
}

bool Hyperplanes::is_geodesic(std::span<const Vertex> path) const {
  std::vector<char> crossed(planes_.size(), 0);
  bool geodesic = true;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto e = graph_.edge_index(path[i], path[i + 1]);
    if (!e) {
      throw InputError("path step " + graph_.name(path[i]) + " -> " + graph_.name(path[i + 1]) +
                       " is not an edge");
    }
    char& seen = crossed[edge_class_[*e]];
    if (seen) geodesic = false;
    seen = 1;
  }
  return geodesic;
}

VertexSet Hyperplanes::convex_hull(const VertexSet& s) const {
  if (s.none()) throw InputError("convex hull of an empty set");
  VertexSet hull = graph_.full_set();
  for (const auto& plane : planes_) {
    if (s.is_subset_of(plane.side_a)) {
      hull &= plane.side_a;
    } else if (s.is_subset_of(plane.side_b)) {
      hull &= plane.side_b;
    }
  }
  return hull;
}

bool is_convex(const Hyperplanes& h, const VertexSet& s) { return s.any() && h.convex_hull(s) == s; }

Vertex gate(const Graph& g, const VertexSet& convex, Vertex v) {
  if (convex.none()) throw InputError("gate onto an empty set");
  int best = -1;
  std::size_t ties = 0;
  Vertex arg = 0;
  for (Vertex c : members(convex)) {
    const int d = g.distance(v, c);
    if (best < 0 || d < best) {
      best = d;
      arg = c;
      ties = 1;
    } else if (d == best) {
      ++ties;
    }
  }
  if (ties != 1) {
    throw InternalError("nearest point of " + g.name(v) + " is not unique (" + std::to_string(ties) +
                        " at distance " + std::to_string(best) + ")");
  }
  return arg;
}

std::optional<FacingTriple> facing_triple(const Hyperplanes& h) {
  const std::size_t n = h.count();
  // disjoint[i*n + j] bit (2*si + sj): side si of i misses side sj of j.
  std::vector<unsigned char> disjoint(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      unsigned char mask = 0;
      for (int si = 0; si < 2; ++si) {
        for (int sj = 0; sj < 2; ++sj) {
          if (!h[i].side(si).intersects(h[j].side(sj))) mask |= static_cast<unsigned char>(1U << (2 * si + sj));
        }
      }
      disjoint[i * n + j] = mask;
    }
  }
  auto apart = [&](std::size_t i, int si, std::size_t j, int sj) {
    return (disjoint[i * n + j] >> (2 * si + sj) & 1U) != 0;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (disjoint[i * n + j] == 0) continue;  // transverse pair
      for (std::size_t k = j + 1; k < n; ++k) {
        if (disjoint[i * n + k] == 0 || disjoint[j * n + k] == 0) continue;
        for (int si = 0; si < 2; ++si) {
          for (int sj = 0; sj < 2; ++sj) {
            if (!apart(i, si, j, sj)) continue;
            for (int sk = 0; sk < 2; ++sk) {
              if (apart(i, si, k, sk) && apart(j, sj, k, sk)) return FacingTriple{{i, j, k}, {si, sj, sk}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

EmbeddingTable canonical_embedding(const Hyperplanes& h, Vertex basepoint) {
  const Graph& g = h.graph();
  if (basepoint >= g.order()) throw InputError("basepoint out of range");
  EmbeddingTable table{basepoint, {}, std::vector<VertexSet>(g.order(), VertexSet(h.count()))};
  for (std::size_t j = 0; j < h.count(); ++j) {
    table.planes.push_back(h[j].id);
    const VertexSet& far = h[j].side_a.test(basepoint) ? h[j].side_b : h[j].side_a;
    for (Vertex v : members(far)) table.coordinates[v].set(j);
  }
  return table;
}

std::string coordinate_string(const VertexSet& bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits.test(i)) s[i] = '1';
  }
  return s;
}

}  // namespace medianforge
