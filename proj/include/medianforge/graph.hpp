#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace medianforge {

/// Index of a vertex inside its graph. Indices follow lexicographic name order.
using Vertex = std::size_t;

/// Subset of the vertices of one graph, one bit per vertex index.
using VertexSet = boost::dynamic_bitset<>;

struct Edge {
  Vertex u;  // u < v
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using NamedEdge = std::pair<std::string, std::string>;

/// Finite simple connected graph with named vertices.
///
/// Graphs are immutable handles: copies share the same storage, including the
/// lazily built all-pairs distance table, and may be used from several threads.
/// Vertex names are stored in lexicographic order, so `Vertex` indices and
/// edge indices are already in the deterministic output order.
class Graph {
 public:
  /// Throws InputError on duplicate names, loops, repeated or dangling edges,
  /// an empty vertex list, or a disconnected graph.
  Graph(std::vector<std::string> vertex_names, const std::vector<NamedEdge>& edges);

  std::size_t order() const { return impl_->names.size(); }
  std::size_t size() const { return impl_->edges.size(); }

  const std::string& name(Vertex v) const { return impl_->names[v]; }
  const std::vector<std::string>& names() const { return impl_->names; }

  std::optional<Vertex> find(std::string_view name) const;
  /// Throws InputError for an unknown name.
  Vertex index(std::string_view name) const;

  std::span<const Vertex> neighbors(Vertex v) const { return impl_->adjacency[v]; }
  std::size_t degree(Vertex v) const { return impl_->adjacency[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges sorted by (u, v).
  const std::vector<Edge>& edges() const { return impl_->edges; }
  /// Index of edge {u, v} in edges(); nullopt when u, v are not adjacent.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  /// Graph distance, answered from the cached all-pairs table.
  int distance(Vertex u, Vertex v) const;
  /// Single-source breadth-first distances; does not touch the cache.
  std::vector<int> bfs(Vertex source) const;

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet full_set() const;
  VertexSet set_of(std::span<const Vertex> members) const;

  /// Subgraph induced by a nonempty connected vertex set.
  Graph induced(const VertexSet& members) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct DistanceCache;
  struct Impl {
    std::vector<std::string> names;
    std::vector<std::vector<Vertex>> adjacency;
    std::vector<Edge> edges;
    std::shared_ptr<DistanceCache> distances;
  };

  const std::vector<std::uint16_t>& distance_table() const;

  std::shared_ptr<const Impl> impl_;
};

/// Members of a vertex set in increasing index order.
std::vector<Vertex> members(const VertexSet& set);

/// Sorted vertex names of a set.
std::vector<std::string> member_names(const Graph& g, const VertexSet& set);

/// True when the graph admits a proper 2-coloring.
bool is_bipartite(const Graph& g);

/// Number of connected components of the subgraph induced by `members`.
std::size_t component_count(const Graph& g, const VertexSet& members);

}  // namespace medianforge
