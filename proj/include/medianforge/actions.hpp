#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "medianforge/cubes.hpp"
#include "medianforge/errors.hpp"
#include "medianforge/graph.hpp"
#include "medianforge/hyperplanes.hpp"

namespace medianforge {

/// Graph automorphism stored as an image table: image[v] = g(v).
class Automorphism {
 public:
  /// Validates bijectivity and preservation of adjacency and non-adjacency.
  Automorphism(const Graph& g, std::vector<Vertex> image);

  Vertex operator()(Vertex v) const { return image_[v]; }
  const std::vector<Vertex>& image() const { return image_; }
  Automorphism inverse() const;
  VertexSet apply(const VertexSet& s) const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  struct Trusted {};
  Automorphism(std::vector<Vertex> image, Trusted) : image_(std::move(image)) {}

  std::vector<Vertex> image_;
};

class NotBijectiveError : public InputError {
 public:
  using InputError::InputError;
};

/// Carries an edge whose image is a non-edge, or a non-edge whose image is an edge.
class NotAdjacencyPreservingError : public InputError {
 public:
  NotAdjacencyPreservingError(const std::string& what, Vertex u, Vertex v)
      : InputError(what), u_(u), v_(v) {}
  Vertex u() const { return u_; }
  Vertex v() const { return v_; }

 private:
  Vertex u_;
  Vertex v_;
};

/// Validates a vertex-name map (must be total) as an automorphism of g.
Automorphism check_automorphism(const Graph& g, const std::map<std::string, std::string>& perm);

using ActionGenerators = std::vector<Automorphism>;

/// Closure of {v} under the generators and their inverses.
VertexSet orbit(const Graph& g, const ActionGenerators& gens, Vertex v);

struct BalanceEntry {
  std::size_t plane;               // index into the subgraph's hyperplanes
  bool balanced = false;
  std::optional<VertexSet> larger;  // J+, in vertices of the full graph
};

struct BalanceTable {
  Graph subgraph;  // induced on the convex set
  std::vector<BalanceEntry> entries;
};

/// Labels each hyperplane of the subgraph induced on a convex set as
/// balanced or as unbalanced with its larger halfspace. Throws InputError
/// when `sub` is not convex.
BalanceTable classify_hyperplanes(const Hyperplanes& h, const VertexSet& sub);

struct InvariantCubeTrace {
  VertexSet orbit;
  VertexSet hull;
  BalanceTable balance;
};

/// Cube stabilized by every generator: the intersection of the larger
/// halfspaces of unbalanced hyperplanes inside the convex hull of the orbit of
/// the least vertex. Postconditions (nonempty, induces a cube, setwise fixed)
/// are checked and raise InternalError.
Cube invariant_cube(const Hyperplanes& h, const ActionGenerators& gens,
                   std::optional<InvariantCubeTrace>* trace = nullptr);

/// Whether some word in the generators maps a halfspace D of the plane into
/// its complement (inclusive: gD = D^c counts). The search walks images of D;
/// `max_word_length` = nullopt searches until the orbit of D is exhausted.
bool is_flippable(const Hyperplanes& h, std::size_t plane, const ActionGenerators& gens,
                  std::optional<std::size_t> max_word_length = std::nullopt);

}  // namespace medianforge
