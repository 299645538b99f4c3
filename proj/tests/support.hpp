#pragma once

// Shared fixtures and independent oracles for the unit and acceptance tests.
// The oracles below deliberately avoid the library's algorithms: distances
// come from Floyd-Warshall, medians from raw distance sums, and PL singular
// sets from pointwise evaluation of the defining data.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "medianforge/actions.hpp"
#include "medianforge/cubulation.hpp"
#include "medianforge/generators.hpp"
#include "medianforge/graph.hpp"
#include "medianforge/plcircle.hpp"

namespace testkit {

using namespace medianforge;

inline Graph make_graph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges) {
  return Graph(std::move(vertices), edges);
}

inline Graph path_graph(const std::vector<std::string>& names) {
  std::vector<NamedEdge> edges;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) edges.emplace_back(names[i], names[i + 1]);
  return Graph(names, edges);
}

inline Graph gen(std::string_view family, std::vector<int> params, std::optional<std::uint64_t> seed = std::nullopt) {
  return generate(family, params, seed);
}

/// Q3 with vertex 111 deleted.
inline Graph cube_minus_vertex() {
  const Graph q = gen("hypercube", {3});
  std::vector<std::string> names;
  for (const auto& n : q.names()) {
    if (n != "111") names.push_back(n);
  }
  std::vector<NamedEdge> edges;
  for (const Edge& e : q.edges()) {
    if (q.name(e.u) != "111" && q.name(e.v) != "111") edges.emplace_back(q.name(e.u), q.name(e.v));
  }
  return Graph(names, edges);
}

// ---------------------------------------------------------------- distances

using Table = std::vector<std::vector<int>>;

inline Table floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  const int inf = static_cast<int>(n) + 1;
  Table d(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// Number of vertices m on geodesics between every pair of x, y, z.
inline std::size_t brute_median_count(const Table& d, std::size_t x, std::size_t y, std::size_t z) {
  std::size_t count = 0;
  for (std::size_t m = 0; m < d.size(); ++m) {
    if (d[x][m] + d[m][y] == d[x][y] && d[y][m] + d[m][z] == d[y][z] && d[z][m] + d[m][x] == d[z][x]) ++count;
  }
  return count;
}

inline bool brute_is_median(const Graph& g) {
  const Table d = floyd_warshall(g);
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = x + 1; y < g.order(); ++y) {
      for (std::size_t z = y + 1; z < g.order(); ++z) {
        if (brute_median_count(d, x, y, z) != 1) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- corpus

struct Named {
  std::string label;
  Graph graph;
  bool median;  // expected verdict, known by construction
};

inline std::vector<Wallspace> random_wallspaces(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Wallspace> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t points = 3 + uniform_below(rng, 6);
    const std::size_t walls = 1 + uniform_below(rng, 12);
    out.push_back(random_wallspace(rng, points, walls));
  }
  return out;
}

/// Median graphs by construction plus the negative controls.
inline std::vector<Named> corpus() {
  std::vector<Named> out;
  for (int n = 1; n <= 6; ++n) out.push_back({"hypercube " + std::to_string(n), gen("hypercube", {n}), true});
  for (int a = 1; a <= 5; ++a) {
    for (int b = a; b <= 5; ++b) {
      out.push_back({"grid " + std::to_string(a) + "x" + std::to_string(b), gen("grid", {a, b}), true});
      for (int c = 2; c <= 3; ++c) {
        out.push_back({"grid " + std::to_string(a) + "x" + std::to_string(b) + "x" + std::to_string(c),
                       gen("grid", {a, b, c}), true});
      }
    }
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (int n : {8, 25, 60, 120, 200}) {
      out.push_back({"random_tree " + std::to_string(n) + " seed " + std::to_string(seed),
                     gen("random_tree", {n}, seed), true});
    }
  }
  for (int k : {1, 3, 6}) out.push_back({"star " + std::to_string(k), gen("star", {k}), true});
  out.push_back({"cycle 4", gen("cycle", {4}), true});
  std::size_t i = 0;
  for (const auto& ws : random_wallspaces(50, 2024)) {
    out.push_back({"wallspace dual " + std::to_string(i++), dualize(ws).graph, true});
  }
  out.push_back({"complete_bipartite 2x3", gen("complete_bipartite", {2, 3}), false});
  for (int n = 6; n <= 12; n += 2) out.push_back({"cycle " + std::to_string(n), gen("cycle", {n}), false});
  out.push_back({"hypercube 3 minus a vertex", cube_minus_vertex(), false});
  return out;
}

// ---------------------------------------------------------------- actions

using NameMap = std::map<std::string, std::string>;

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[uniform_below(rng, i)]);
  return p;
}

/// Coordinate permutation followed by a flip mask on bit-string vertices.
inline NameMap hyperoctahedral(std::mt19937_64& rng, const Graph& g, std::size_t dim) {
  const auto perm = random_permutation(rng, dim);
  std::vector<bool> flip(dim);
  for (std::size_t i = 0; i < dim; ++i) flip[i] = uniform_below(rng, 2) == 1;
  NameMap m;
  for (const auto& name : g.names()) {
    std::string image(dim, '0');
    for (std::size_t i = 0; i < dim; ++i) {
      const bool bit = (name[perm[i]] == '1') != flip[i];
      image[i] = bit ? '1' : '0';
    }
    m[name] = image;
  }
  return m;
}

inline std::vector<std::string> split_coords(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == '_') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline std::string join_coords(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "_" : "") + parts[i];
  return out;
}

/// Reflection of one grid axis (dims are single digit in the corpus).
inline NameMap grid_reflection(const Graph& g, const std::vector<int>& dims, std::size_t axis) {
  NameMap m;
  for (const auto& name : g.names()) {
    auto parts = split_coords(name);
    parts[axis] = std::to_string(dims[axis] - 1 - std::stoi(parts[axis]));
    m[name] = join_coords(parts);
  }
  return m;
}

inline NameMap grid_swap(const Graph& g, std::size_t a, std::size_t b) {
  NameMap m;
  for (const auto& name : g.names()) {
    auto parts = split_coords(name);
    std::swap(parts[a], parts[b]);
    m[name] = join_coords(parts);
  }
  return m;
}

inline NameMap star_permutation(std::mt19937_64& rng, const Graph& g) {
  std::vector<std::string> leaves;
  for (const auto& name : g.names()) {
    if (name != "h") leaves.push_back(name);
  }
  const auto perm = random_permutation(rng, leaves.size());
  NameMap m{{"h", "h"}};
  for (std::size_t i = 0; i < leaves.size(); ++i) m[leaves[i]] = leaves[perm[i]];
  return m;
}

/// Two copies of a random tree joined at their roots, with the swap.
inline std::pair<Graph, NameMap> glued_trees(int n, std::uint64_t seed) {
  const Graph t = gen("random_tree", {n}, seed);
  std::vector<std::string> names;
  std::vector<NamedEdge> edges;
  NameMap swap;
  for (const auto& v : t.names()) {
    names.push_back("x" + v);
    names.push_back("y" + v);
    swap["x" + v] = "y" + v;
    swap["y" + v] = "x" + v;
  }
  for (const Edge& e : t.edges()) {
    edges.emplace_back("x" + t.name(e.u), "x" + t.name(e.v));
    edges.emplace_back("y" + t.name(e.u), "y" + t.name(e.v));
  }
  edges.emplace_back("x" + t.name(0), "y" + t.name(0));
  return {Graph(names, edges), swap};
}

struct ActionCase {
  std::string label;
  Graph graph;
  std::vector<NameMap> generators;
};

/// Random finite actions on median graphs: hyperoctahedral moves on
/// hypercubes, reflections and axis swaps on grids, leaf permutations on
/// stars, and swaps of symmetric glued trees.
inline std::vector<ActionCase> random_actions(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ActionCase> out;
  while (out.size() < count) {
    const std::string tag = std::to_string(out.size());
    switch (out.size() % 4) {
      case 0: {
        const int dim = 1 + static_cast<int>(uniform_below(rng, 5));
        Graph g = gen("hypercube", {dim});
        std::vector<NameMap> gens;
        for (std::size_t k = 0, n = 1 + uniform_below(rng, 2); k < n; ++k) {
          gens.push_back(hyperoctahedral(rng, g, static_cast<std::size_t>(dim)));
        }
        out.push_back({"hypercube action " + tag, g, gens});
        break;
      }
      case 1: {
        const int a = 1 + static_cast<int>(uniform_below(rng, 5));
        const bool square = uniform_below(rng, 2) == 1;
        const int b = square ? a : 1 + static_cast<int>(uniform_below(rng, 5));
        std::vector<int> dims{a, b};
        if (uniform_below(rng, 3) == 0) dims.push_back(1 + static_cast<int>(uniform_below(rng, 3)));
        Graph g = gen("grid", dims);
        std::vector<NameMap> gens;
        for (std::size_t axis = 0; axis < dims.size(); ++axis) {
          if (uniform_below(rng, 2) == 1) gens.push_back(grid_reflection(g, dims, axis));
        }
        if (dims[0] == dims[1] && uniform_below(rng, 2) == 1) gens.push_back(grid_swap(g, 0, 1));
        out.push_back({"grid action " + tag, g, gens});
        break;
      }
      case 2: {
        const int k = 1 + static_cast<int>(uniform_below(rng, 8));
        Graph g = gen("star", {k});
        std::vector<NameMap> gens;
        for (std::size_t j = 0, n = 1 + uniform_below(rng, 2); j < n; ++j) gens.push_back(star_permutation(rng, g));
        out.push_back({"star action " + tag, g, gens});
        break;
      }
      default: {
        const int n = 2 + static_cast<int>(uniform_below(rng, 60));
        auto [g, swap] = glued_trees(n, rng());
        out.push_back({"glued tree action " + tag, g, {swap}});
        break;
      }
    }
  }
  return out;
}

inline ActionGenerators to_generators(const Graph& g, const std::vector<NameMap>& maps) {
  ActionGenerators gens;
  for (const auto& m : maps) gens.push_back(check_automorphism(g, m));
  return gens;
}

// ---------------------------------------------------------------- PL oracle

/// Raw PL data evaluated directly from the (breakpoints, values) lists.
struct PLData {
  std::vector<Rational> b;
  std::vector<Rational> v;

  std::size_t k() const { return b.size(); }
  Rational bx(std::size_t i) const { return i < k() ? b[i] : b[0] + 1; }
  Rational vx(std::size_t i) const { return i < k() ? v[i] : v[0] + 1; }
  Rational slope(std::size_t i) const { return (vx(i + 1) - vx(i)) / (bx(i + 1) - bx(i)); }

  /// Piece index and offset so that t lies in [bx(i), bx(i+1)) after shifting by `shift`.
  std::pair<std::size_t, BigInt> locate(const std::vector<Rational>& keys, const Rational& t) const {
    Rational base = keys[0];
    BigInt shift = floor_of(t - base);
    Rational u = t - Rational(shift);
    std::size_t i = 0;
    while (i + 1 < keys.size() && keys[i + 1] <= u) ++i;
    return {i, shift};
  }
  Rational lift(const Rational& t) const {
    auto [i, shift] = locate(b, t);
    const Rational u = t - Rational(shift);
    return vx(i) + slope(i) * (u - bx(i)) + Rational(shift);
  }
  Rational apply(const Rational& t) const { return frac(lift(t)); }
  Rational lift_inverse(const Rational& y) const {
    auto [i, shift] = locate(v, y);
    const Rational u = y - Rational(shift);
    return bx(i) + (u - vx(i)) / slope(i) + Rational(shift);
  }
  Rational apply_inverse(const Rational& y) const { return frac(lift_inverse(y)); }
  /// Left slope over right slope at a circle point; 1 away from breakpoints.
  Rational jump(const Rational& t) const {
    auto [i, shift] = locate(b, t);
    if (t - Rational(shift) != b[i]) return 1;
    const std::size_t left = i == 0 ? k() - 1 : i - 1;
    return slope(left) / slope(i);
  }
  std::vector<Rational> singular() const {
    std::vector<Rational> out;
    for (const auto& x : b) {
      if (jump(x) != 1) out.push_back(x);
    }
    return out;
  }
};

/// #Sing(g^n) for n = 1..n_max from the chain rule: a point x is singular for
/// g^n exactly when the product of jumps along x, g(x), ..., g^{n-1}(x) is
/// not 1, and only points g^{-j}(s) with s in Sing(g), j < n, can qualify.
inline std::vector<std::size_t> sing_power_counts(const PLData& g, std::size_t n_max) {
  const auto base = g.singular();
  std::vector<std::vector<Rational>> preimages(base.size());
  for (std::size_t s = 0; s < base.size(); ++s) {
    Rational x = base[s];
    for (std::size_t j = 0; j < n_max; ++j) {
      preimages[s].push_back(x);
      x = g.apply_inverse(x);
    }
  }
  std::vector<std::size_t> counts;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Rational> candidates;
    for (const auto& list : preimages) candidates.insert(candidates.end(), list.begin(), list.begin() + n);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::size_t count = 0;
    for (const auto& x : candidates) {
      Rational product = 1;
      Rational y = x;
      for (std::size_t j = 0; j < n; ++j) {
        product *= g.jump(y);
        y = g.apply(y);
      }
      if (product != 1) ++count;
    }
    counts.push_back(count);
  }
  return counts;
}

/// Least-squares slope of the second half of the sequence, doubled and rounded.
inline long fitted_k(const std::vector<std::size_t>& s) {
  const std::size_t from = s.size() / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(s.size() - from);
  for (std::size_t i = from; i < s.size(); ++i) {
    const double x = static_cast<double>(i + 1);
    const double y = static_cast<double>(s[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return std::lround(2 * slope);
}

inline Rational q(long p, long d = 1) { return Rational(p) / d; }

inline PLCircleHomeo homeo(const PLData& d) { return PLCircleHomeo(d.b, d.v); }

/// Random PL element: up to 8 breakpoints and as many images in [0,1), all
/// with numerators and denominators at most 100.
inline PLData random_pl(std::mt19937_64& rng) {
  auto points = [&](std::size_t k) {
    std::vector<Rational> out;
    while (out.size() < k) {
      const long den = 1 + static_cast<long>(uniform_below(rng, 100));
      const long num = static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(den)));
      Rational r = q(num, den);
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const std::size_t k = 1 + uniform_below(rng, 8);
  return PLData{points(k), points(k)};
}

}  // namespace testkit
