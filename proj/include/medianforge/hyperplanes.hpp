#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "medianforge/graph.hpp"

namespace medianforge {

/// An edge class of the square relation together with its two halfspaces.
struct Hyperplane {
  std::size_t id;                  // least edge index in the class
  std::vector<std::size_t> edges;  // sorted edge indices
  VertexSet side_a;                // contains the smaller endpoint of edge `id`
  VertexSet side_b;

  const VertexSet& side(int s) const { return s == 0 ? side_a : side_b; }
};

/// Hyperplanes of a graph: edge classes under the transitive closure of
/// "opposite sides of a 4-cycle", sorted by id.
///
/// Construction throws HalfspaceError if deleting some class does not leave
/// exactly two components, which signals non-median input.
class Hyperplanes {
 public:
  explicit Hyperplanes(Graph g);

  const Graph& graph() const { return graph_; }
  const std::vector<Hyperplane>& all() const { return planes_; }
  std::size_t count() const { return planes_.size(); }
  const Hyperplane& operator[](std::size_t i) const { return planes_[i]; }

  /// Index into all() of the hyperplane containing an edge.
  std::size_t of_edge(std::size_t edge) const { return edge_class_[edge]; }
  std::size_t of_edge(Vertex u, Vertex v) const;

  bool separates(std::size_t plane, Vertex x, Vertex y) const;
  /// Indices of hyperplanes with x and y on different sides, sorted.
  std::vector<std::size_t> separating(Vertex x, Vertex y) const;

  /// All four halfspace intersections nonempty.
  bool transverse(std::size_t i, std::size_t j) const;

  /// True when no hyperplane carries two edges of the path. Throws InputError
  /// if consecutive entries are not adjacent.
  bool is_geodesic(std::span<const Vertex> path) const;

  /// Intersection of every halfspace containing `s`. Throws InputError on empty s.
  VertexSet convex_hull(const VertexSet& s) const;

 private:
  Graph graph_;
  std::vector<Hyperplane> planes_;
  std::vector<std::size_t> edge_class_;
};

/// Closed under intervals; decided as convex_hull(s) == s.
bool is_convex(const Hyperplanes& h, const VertexSet& s);

/// Nearest point of a convex set, found by exhaustive minimization.
/// Throws InternalError when the minimizer is not unique.
Vertex gate(const Graph& g, const VertexSet& convex, Vertex v);

/// Three hyperplanes with pairwise-disjoint chosen halfspaces.
struct FacingTriple {
  std::array<std::size_t, 3> planes;  // increasing indices into Hyperplanes::all()
  std::array<int, 3> sides;           // 0 = side_a, 1 = side_b
};

/// First facing triple in (plane indices, side choices) lexicographic order.
std::optional<FacingTriple> facing_triple(const Hyperplanes& h);

/// Hypercube coordinates relative to a basepoint: bit j is set when the
/// vertex lies on the side of hyperplane j away from the basepoint.
struct EmbeddingTable {
  Vertex basepoint;
  std::vector<std::size_t> planes;   // hyperplane ids, one per coordinate
  std::vector<VertexSet> coordinates;  // per vertex, one bit per coordinate
};

EmbeddingTable canonical_embedding(const Hyperplanes& h, Vertex basepoint);

/// Coordinates as a '0'/'1' string, coordinate 0 first.
std::string coordinate_string(const VertexSet& bits);

}  // namespace medianforge
