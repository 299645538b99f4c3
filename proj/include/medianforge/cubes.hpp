#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "medianforge/graph.hpp"
#include "medianforge/hyperplanes.hpp"

namespace medianforge {

struct Cube {
  int dimension = 0;
  std::vector<Vertex> vertices;  // sorted, 2^dimension entries

  friend bool operator==(const Cube&, const Cube&) = default;
  friend auto operator<=>(const Cube& a, const Cube& b) {
    if (auto c = a.dimension <=> b.dimension; c != 0) return c;
    return a.vertices <=> b.vertices;
  }
};

/// True when `vertices` induces the one-skeleton of a hypercube.
bool induces_cube(const Graph& g, const std::vector<Vertex>& vertices);

constexpr std::uint64_t kDefaultCellCeiling = 1'000'000;

/// Cells of each dimension over a graph.
///
/// Dimension 0 cells are the vertices and dimension 1 cells the edges; every
/// face of a cell is a cell. Cells are kept in (dimension, vertex set) order.
class CubeComplex {
 public:
  /// Validates the invariants above; throws InputError otherwise.
  CubeComplex(Graph base, std::vector<std::vector<Cube>> cells);

  const Graph& base() const { return base_; }
  const std::vector<std::vector<Cube>>& cells() const { return cells_; }
  const std::vector<Cube>& cells(int dimension) const;
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }

  std::vector<std::uint64_t> f_vector() const;
  std::int64_t euler_characteristic() const;
  bool contains(const Cube& c) const;

  /// The same complex with one top-level cell (no cofaces) removed.
  CubeComplex without(const Cube& cell) const;

 private:
  Graph base_;
  std::vector<std::vector<Cube>> cells_;
};

/// Cube completion: every induced hypercube subgraph, each exactly once.
///
/// k-cubes are grown from (k-1)-cubes by matching them against a parallel
/// copy. Throws ResourceError when more than `cell_ceiling` cells appear.
CubeComplex enumerate_cubes(const Graph& g, std::uint64_t cell_ceiling = kDefaultCellCeiling);

struct MaximalCube {
  Cube cube;
  std::vector<std::size_t> planes;  // sorted hyperplane indices crossing the cube
};

/// Cubes that are not faces of larger cells, each with the hyperplanes it crosses.
std::vector<MaximalCube> maximal_cubes(const CubeComplex& c, const Hyperplanes& h);

/// Maximal families of pairwise transverse hyperplanes (each sorted), in
/// lexicographic order. Computed from halfspace intersections only.
std::vector<std::vector<std::size_t>> maximal_transverse_families(const Hyperplanes& h);

/// Link of a vertex: one link vertex per incident edge (named by the
/// neighbor), one simplex per cell containing the vertex.
struct SimplicialLink {
  Vertex center;
  std::vector<Vertex> vertices;               // neighbors of center, sorted
  std::vector<std::vector<Vertex>> simplices;  // sorted, includes singletons
};

SimplicialLink vertex_link(const CubeComplex& c, Vertex v);

struct FlagResult {
  bool flag = true;
  std::optional<std::vector<Vertex>> witness;  // a clique that spans no simplex
};

FlagResult is_flag(const SimplicialLink& link);

enum class TriState { Yes, No, Unknown };

std::string to_string(TriState t);

struct SimplyConnectedResult {
  TriState verdict = TriState::Unknown;
  std::string method;
  std::optional<std::vector<Vertex>> witness_cycle;  // closed walk, first == last
};

struct PairWitness {
  Vertex center;
  Vertex a;
  Vertex b;
  std::vector<Vertex> opposite;  // the >= 2 fourth corners
};

struct TripleWitness {
  Vertex center;
  Vertex a;
  Vertex b;
  Vertex c;
};

struct LocalReport {
  SimplyConnectedResult condition1;
  bool condition2 = true;
  std::optional<PairWitness> condition2_witness;
  bool condition3 = true;
  std::optional<TripleWitness> condition3_witness;

  bool all_yes() const { return condition1.verdict == TriState::Yes && condition2 && condition3; }
};

struct LocalOptions {
  /// Relator inspections allowed for the square-contraction pass.
  std::uint64_t contraction_budget = 50'000'000;
};

/// Radius-3 medianness criterion.
///
/// Condition 2: two edges at a vertex span at most one 4-cycle. Condition 3:
/// three edges at a vertex that pairwise span 4-cycles span a 3-cube.
/// Condition 1 (simple connectivity of the square completion) is Yes when
/// square relators kill every generator of the fundamental group, No when the
/// abelianization is nontrivial, Unknown otherwise.
LocalReport verylocal_check(const Graph& g, const LocalOptions& options = {});

/// Simple connectivity of the square completion on its own.
SimplyConnectedResult square_completion_simply_connected(const Graph& g, const LocalOptions& options = {});

}  // namespace medianforge
