#pragma once

#include <array>
#include <optional>
#include <vector>

#include "medianforge/errors.hpp"
#include "medianforge/graph.hpp"

namespace medianforge {

/// Vertices lying on some geodesic from x to y: {v : d(x,v) + d(v,y) = d(x,y)}.
VertexSet interval(const Graph& g, Vertex x, Vertex y);

/// All vertices in interval(x,y) ∩ interval(y,z) ∩ interval(z,x), sorted.
std::vector<Vertex> median_candidates(const Graph& g, Vertex x, Vertex y, Vertex z);

class NoMedianError : public Error {
 public:
  using Error::Error;
};

class NotUniqueMedianError : public Error {
 public:
  NotUniqueMedianError(const std::string& what, std::vector<Vertex> candidates)
      : Error(what), candidates_(std::move(candidates)) {}
  const std::vector<Vertex>& candidates() const { return candidates_; }

 private:
  std::vector<Vertex> candidates_;
};

/// The unique median of x, y, z. Throws NoMedianError or NotUniqueMedianError.
Vertex median(const Graph& g, Vertex x, Vertex y, Vertex z);

struct MedianWitness {
  std::array<Vertex, 3> triple;
  std::vector<Vertex> candidates;  // size != 1
};

struct MedianReport {
  bool verdict = true;
  std::optional<MedianWitness> witness;  // present exactly when verdict is false
};

/// Exhaustive check that every vertex triple has exactly one median.
///
/// O(n^3) over the cached distance table. The reported witness is the
/// lexicographically least failing triple x < y < z, independent of `jobs`.
MedianReport medianness_oracle(const Graph& g, unsigned jobs = 1);

}  // namespace medianforge
