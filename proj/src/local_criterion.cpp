#include <algorithm>
#include <array>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "medianforge/cubes.hpp"

namespace medianforge {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::vector<Vertex> common_neighbors(const Graph& g, Vertex a, Vertex b, Vertex skip) {
  std::vector<Vertex> out;
  std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(), g.neighbors(b).end(),
                        std::back_inserter(out));
  std::erase(out, skip);
  return out;
}

template <std::size_t N>
bool distinct(std::array<Vertex, N> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

// Row-reduced basis (Hermite form) of the integer lattice spanned by `rows`.
struct Lattice {
  std::size_t columns = 0;
  std::vector<std::vector<BigInt>> basis;  // row i has its pivot at pivots[i]
  std::vector<std::size_t> pivots;

  bool is_everything() const {
    if (basis.size() != columns) return false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (abs(basis[i][pivots[i]]) != 1) return false;
    }
    return true;
  }

  bool contains(std::vector<BigInt> v) const {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const BigInt& p = basis[i][pivots[i]];
      if (v[pivots[i]] % p != 0) return false;
      const BigInt q = v[pivots[i]] / p;
      for (std::size_t c = 0; c < columns; ++c) v[c] -= q * basis[i][c];
    }
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
  }
};

Lattice reduce(std::vector<std::vector<BigInt>> rows, std::size_t columns) {
  Lattice out;
  out.columns = columns;
  std::size_t top = 0;
  for (std::size_t col = 0; col < columns && top < rows.size(); ++col) {
    // Euclid on the column until a single nonzero entry remains at `top`.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        const BigInt q = rows[r][col] / rows[top][col];
        for (std::size_t c = col; c < columns; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        out.basis.push_back(rows[top]);
        out.pivots.push_back(col);
        ++top;
        break;
      }
    }
  }
  return out;
}

}  // namespace

SimplyConnectedResult square_completion_simply_connected(const Graph& g, const LocalOptions& options) {
  const std::size_t n = g.order();
  // Breadth-first spanning tree; its edges are trivial in the fundamental group.
  std::vector<Vertex> parent(n, n);
  std::vector<int> depth(n, -1);
  std::vector<char> tree_edge(g.size(), 0);
  std::vector<Vertex> queue{0};
  depth[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (depth[w] >= 0) continue;
      depth[w] = depth[u] + 1;
      parent[w] = u;
      tree_edge[*g.edge_index(u, w)] = 1;
      queue.push_back(w);
    }
  }

  std::vector<std::size_t> generator_of(g.size(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> generator_edge;
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (!tree_edge[e]) {
      generator_of[e] = generator_edge.size();
      generator_edge.push_back(e);
    }
  }
  const std::size_t generators = generator_edge.size();
  if (generators == 0) return {TriState::Yes, "no cycles", std::nullopt};

  // Square relators as signed generator lists (edges oriented low -> high).
  struct Letter {
    std::size_t generator;
    int sign;
  };
  std::vector<std::vector<Letter>> relators;
  std::vector<std::vector<std::size_t>> relators_of(generators);
  for (Vertex a = 0; a < n; ++a) {
    const auto nbrs = g.neighbors(a);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        for (Vertex c : common_neighbors(g, nbrs[i], nbrs[j], a)) {
          if (c < a || nbrs[i] < a || nbrs[j] < a) continue;  // a is the least corner
          const std::array<Vertex, 5> walk{a, nbrs[i], c, nbrs[j], a};
          std::vector<Letter> word;
          for (std::size_t s = 0; s < 4; ++s) {
            const std::size_t e = *g.edge_index(walk[s], walk[s + 1]);
            if (tree_edge[e]) continue;
            word.push_back({generator_of[e], walk[s] < walk[s + 1] ? 1 : -1});
          }
          for (const auto& l : word) relators_of[l.generator].push_back(relators.size());
          relators.push_back(std::move(word));
        }
      }
    }
  }

  // Square contraction: a relator with a single live generator kills it.
  std::vector<char> alive(generators, 1);
  std::size_t remaining = generators;
  std::vector<std::size_t> pending(relators.size());
  for (std::size_t r = 0; r < relators.size(); ++r) pending[r] = r;
  std::uint64_t spent = 0;
  bool exhausted = false;
  while (!pending.empty() && remaining > 0) {
    if (++spent > options.contraction_budget) {
      exhausted = true;
      break;
    }
    const std::size_t r = pending.back();
    pending.pop_back();
    std::size_t live = 0;
    std::size_t last = 0;
    for (const auto& l : relators[r]) {
      if (alive[l.generator]) {
        ++live;
        last = l.generator;
      }
    }
    if (live != 1) continue;
    alive[last] = 0;
    --remaining;
    for (auto other : relators_of[last]) pending.push_back(other);
  }
  if (remaining == 0) {
    return {TriState::Yes, "square contraction killed all " + std::to_string(generators) + " generators",
            std::nullopt};
  }

  // Abelianization over the surviving generators.
  std::vector<std::size_t> column(generators, static_cast<std::size_t>(-1));
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < generators; ++i) {
    if (alive[i]) {
      column[i] = survivors.size();
      survivors.push_back(i);
    }
  }
  std::vector<std::vector<BigInt>> rows;
  for (const auto& word : relators) {
    std::vector<BigInt> row(survivors.size(), 0);
    bool nonzero = false;
    for (const auto& l : word) {
      if (!alive[l.generator]) continue;
      row[column[l.generator]] += l.sign;
    }
    for (const auto& x : row) nonzero = nonzero || x != 0;
    if (nonzero) rows.push_back(std::move(row));
  }
  const Lattice lattice = reduce(std::move(rows), survivors.size());
  if (lattice.is_everything()) {
    return {TriState::Unknown,
            std::string(exhausted ? "contraction budget exhausted" : "square contraction stalled") + " with " +
                std::to_string(remaining) + " generators; first homology vanishes",
            std::nullopt};
  }

  // Witness: the fundamental cycle of a generator outside the relation lattice.
  std::size_t culprit = survivors.front();
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    std::vector<BigInt> unit(survivors.size(), 0);
    unit[i] = 1;
    if (!lattice.contains(unit)) {
      culprit = survivors[i];
      break;
    }
  }
  const Edge& e = g.edges()[generator_edge[culprit]];
  std::vector<Vertex> up{e.u};
  std::vector<Vertex> down{e.v};
  while (up.back() != down.back()) {
    if (depth[up.back()] >= depth[down.back()]) {
      up.push_back(parent[up.back()]);
    } else {
      down.push_back(parent[down.back()]);
    }
  }
  down.pop_back();
  std::vector<Vertex> cycle = up;
  cycle.insert(cycle.end(), down.rbegin(), down.rend());
  cycle.push_back(e.u);

  const std::size_t rank = lattice.basis.size();
  std::string method = "first homology nonzero: relation rank " + std::to_string(rank) + " of " +
                       std::to_string(survivors.size()) + " surviving generators";
  if (rank == survivors.size()) method += " (torsion)";
  return {TriState::No, method, cycle};
}

LocalReport verylocal_check(const Graph& g, const LocalOptions& options) {
  LocalReport report;
  const std::size_t n = g.order();

  for (Vertex v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    const std::size_t d = nbrs.size();
    // opposite[i*d + j]: fourth corners of squares through edges v-nbrs[i], v-nbrs[j].
    std::vector<std::vector<Vertex>> opposite(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        auto corners = common_neighbors(g, nbrs[i], nbrs[j], v);
        if (corners.size() > 1 && report.condition2) {
          report.condition2 = false;
          report.condition2_witness = PairWitness{v, nbrs[i], nbrs[j], corners};
        }
        opposite[i * d + j] = opposite[j * d + i] = std::move(corners);
      }
    }
    if (!report.condition3) continue;
    for (std::size_t i = 0; i < d && report.condition3; ++i) {
      for (std::size_t j = i + 1; j < d && report.condition3; ++j) {
        if (opposite[i * d + j].empty()) continue;
        for (std::size_t k = j + 1; k < d; ++k) {
          const auto& ij = opposite[i * d + j];
          const auto& jk = opposite[j * d + k];
          const auto& ik = opposite[i * d + k];
          if (jk.empty() || ik.empty()) continue;
          bool spans = false;
          for (Vertex x : ij) {
            for (Vertex y : jk) {
              for (Vertex z : ik) {
                const std::array<Vertex, 7> corners{v, nbrs[i], nbrs[j], nbrs[k], x, y, z};
                if (!distinct(corners)) continue;
                for (Vertex w : common_neighbors(g, x, y, v)) {
                  if (g.adjacent(w, z) && std::find(corners.begin(), corners.end(), w) == corners.end()) {
                    spans = true;
                  }
                }
              }
            }
          }
          if (!spans) {
            report.condition3 = false;
            report.condition3_witness = TripleWitness{v, nbrs[i], nbrs[j], nbrs[k]};
            break;
          }
        }
      }
    }
  }

  report.condition1 = square_completion_simply_connected(g, options);
  return report;
}

}  // namespace medianforge
