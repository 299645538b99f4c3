#include "medianforge/graph.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <queue>

#include "medianforge/errors.hpp"

namespace medianforge {

namespace {

// Above this order the quadratic distance table is refused.
constexpr std::size_t kMaxTableOrder = 20000;

std::vector<int> bfs_from(const std::vector<std::vector<Vertex>>& adjacency, Vertex source) {
  std::vector<int> dist(adjacency.size(), -1);
  std::vector<Vertex> queue;
  queue.reserve(adjacency.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : adjacency[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

struct Graph::DistanceCache {
  std::once_flag once;
  std::vector<std::uint16_t> table;
};

Graph::Graph(std::vector<std::string> vertex_names, const std::vector<NamedEdge>& named_edges) {
  if (vertex_names.empty()) throw InputError("graph has no vertices");
  std::sort(vertex_names.begin(), vertex_names.end());
  if (auto dup = std::adjacent_find(vertex_names.begin(), vertex_names.end());
      dup != vertex_names.end()) {
    throw InputError("duplicate vertex '" + *dup + "'");
  }

  auto impl = std::make_shared<Impl>();
  impl->names = std::move(vertex_names);
  impl->adjacency.resize(impl->names.size());
  impl->distances = std::make_shared<DistanceCache>();

  auto lookup = [&](const std::string& n) {
    auto it = std::lower_bound(impl->names.begin(), impl->names.end(), n);
    if (it == impl->names.end() || *it != n) {
      throw InputError("edge endpoint '" + n + "' is not a vertex");
    }
    return static_cast<Vertex>(it - impl->names.begin());
  };

  impl->edges.reserve(named_edges.size());
  for (const auto& [a, b] : named_edges) {
    Vertex u = lookup(a);
    Vertex v = lookup(b);
    if (u == v) throw InputError("loop at vertex '" + a + "'");
    if (u > v) std::swap(u, v);
    impl->edges.push_back({u, v});
  }
  std::sort(impl->edges.begin(), impl->edges.end());
  if (auto dup = std::adjacent_find(impl->edges.begin(), impl->edges.end());
      dup != impl->edges.end()) {
    throw InputError("duplicate edge {" + impl->names[dup->u] + ", " + impl->names[dup->v] + "}");
  }
  for (const Edge& e : impl->edges) {
    impl->adjacency[e.u].push_back(e.v);
    impl->adjacency[e.v].push_back(e.u);
  }
  for (auto& list : impl->adjacency) std::sort(list.begin(), list.end());

  const auto reach = bfs_from(impl->adjacency, 0);
  if (std::find(reach.begin(), reach.end(), -1) != reach.end()) {
    throw InputError("graph is disconnected");
  }
  impl_ = std::move(impl);
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  const auto& names = impl_->names;
  auto it = std::lower_bound(names.begin(), names.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == names.end() || *it != name) return std::nullopt;
  return static_cast<Vertex>(it - names.begin());
}

Vertex Graph::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = impl_->adjacency[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  const auto& edges = impl_->edges;
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges.begin());
}

const std::vector<std::uint16_t>& Graph::distance_table() const {
  auto& cache = *impl_->distances;
  std::call_once(cache.once, [&] {
    const std::size_t n = order();
    if (n > kMaxTableOrder) {
      throw ResourceError("distance table refused for " + std::to_string(n) + " vertices");
    }
    cache.table.resize(n * n);
    for (Vertex s = 0; s < n; ++s) {
      const auto dist = bfs_from(impl_->adjacency, s);
      std::copy(dist.begin(), dist.end(), cache.table.begin() + static_cast<std::ptrdiff_t>(s * n));
    }
  });
  return cache.table;
}

int Graph::distance(Vertex u, Vertex v) const { return distance_table()[u * order() + v]; }

std::vector<int> Graph::bfs(Vertex source) const { return bfs_from(impl_->adjacency, source); }

VertexSet Graph::full_set() const {
  VertexSet s(order());
  s.set();
  return s;
}

VertexSet Graph::set_of(std::span<const Vertex> vs) const {
  VertexSet s(order());
  for (Vertex v : vs) s.set(v);
  return s;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<std::string> names;
  for (Vertex v : members(keep)) names.push_back(name(v));
  std::vector<NamedEdge> edges;
  for (const Edge& e : impl_->edges) {
    if (keep.test(e.u) && keep.test(e.v)) edges.emplace_back(name(e.u), name(e.v));
  }
  return Graph(std::move(names), edges);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.impl_ == b.impl_ || (a.impl_->names == b.impl_->names && a.impl_->edges == b.impl_->edges);
}

std::vector<Vertex> members(const VertexSet& set) {
  std::vector<Vertex> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != VertexSet::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

std::vector<std::string> member_names(const Graph& g, const VertexSet& set) {
  std::vector<std::string> out;
  for (Vertex v : members(set)) out.push_back(g.name(v));
  return out;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  color[0] = 0;
  std::queue<Vertex> queue;
  queue.push(0);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        queue.push(w);
      } else if (color[w] == color[u]) {
        return false;
      }
    }
  }
  return true;
}

std::size_t component_count(const Graph& g, const VertexSet& keep) {
  VertexSet seen(g.order());
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (auto s = keep.find_first(); s != VertexSet::npos; s = keep.find_next(s)) {
    if (seen.test(s)) continue;
    ++count;
    seen.set(s);
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (keep.test(w) && !seen.test(w)) {
          seen.set(w);
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

}  // namespace medianforge
