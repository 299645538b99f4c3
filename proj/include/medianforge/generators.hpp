#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>

#include "medianforge/graph.hpp"

namespace medianforge {

/// Deterministic corpus graphs.
///
/// Families and vertex naming (indices are zero padded to a common width so
/// lexicographic order equals numeric order):
///   hypercube [n]            bit strings of length n, 1 <= n <= 16
///   grid [d1, ..., dk]       "i_j_k" coordinates, every di >= 1
///   random_tree [n]          "t00".."t{n-1}", uniform labeled tree (Prüfer), needs seed
///   cycle [n]                "c0".."c{n-1}", n >= 3
///   complete_bipartite [p,q] "a*" and "b*", p, q >= 1
///   star [k]                 hub "h" with leaves "l0".."l{k-1}"
///
/// Throws InputError for an unknown family or out-of-range parameters.
Graph generate(std::string_view family, std::span<const int> params,
               std::optional<std::uint64_t> seed = std::nullopt);

/// Uniform integer in [0, bound) with a platform-independent draw.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace medianforge
