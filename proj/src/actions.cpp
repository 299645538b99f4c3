#include "medianforge/actions.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace medianforge {

Automorphism::Automorphism(const Graph& g, std::vector<Vertex> image) : image_(std::move(image)) {
  const std::size_t n = g.order();
  if (image_.size() != n) throw NotBijectiveError("map is not total on the vertex set");
  std::vector<char> hit(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (image_[v] >= n) throw NotBijectiveError("image of " + g.name(v) + " is not a vertex");
    if (hit[image_[v]]) throw NotBijectiveError("two vertices map to " + g.name(image_[v]));
    hit[image_[v]] = 1;
  }
  // A bijection sending edges to edges also sends non-edges to non-edges
  // (finite edge sets of equal size).
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(image_[e.u], image_[e.v])) {
      throw NotAdjacencyPreservingError("edge {" + g.name(e.u) + ", " + g.name(e.v) + "} maps to non-edge {" +
                                            g.name(image_[e.u]) + ", " + g.name(image_[e.v]) + "}",
                                        e.u, e.v);
    }
  }
}

Automorphism Automorphism::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (Vertex v = 0; v < image_.size(); ++v) inv[image_[v]] = v;
  return Automorphism(std::move(inv), Trusted{});
}

VertexSet Automorphism::apply(const VertexSet& s) const {
  VertexSet out(s.size());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.set(image_[v]);
  return out;
}

Automorphism check_automorphism(const Graph& g, const std::map<std::string, std::string>& perm) {
  std::vector<Vertex> image(g.order(), g.order());
  for (const auto& [from, to] : perm) image[g.index(from)] = g.index(to);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (image[v] == g.order()) throw NotBijectiveError("no image given for " + g.name(v));
  }
  return Automorphism(g, std::move(image));
}

VertexSet orbit(const Graph& g, const ActionGenerators& gens, Vertex v) {
  std::vector<Automorphism> moves = gens;
  for (const auto& a : gens) moves.push_back(a.inverse());
  VertexSet seen(g.order());
  std::vector<Vertex> work{v};
  seen.set(v);
  while (!work.empty()) {
    const Vertex u = work.back();
    work.pop_back();
    for (const auto& a : moves) {
      if (!seen.test(a(u))) {
        seen.set(a(u));
        work.push_back(a(u));
      }
    }
  }
  return seen;
}

BalanceTable classify_hyperplanes(const Hyperplanes& h, const VertexSet& sub) {
  if (!is_convex(h, sub)) throw InputError("vertex set is not convex");
  const Graph& g = h.graph();
  // Induced indices follow the parent's order because both are lexicographic.
  const auto lift = members(sub);
  BalanceTable table{g.induced(sub), {}};
  const Hyperplanes local(table.subgraph);
  auto to_parent = [&](const VertexSet& s) {
    VertexSet out(g.order());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.set(lift[v]);
    return out;
  };
  for (std::size_t i = 0; i < local.count(); ++i) {
    const auto a = local[i].side_a.count();
    const auto b = local[i].side_b.count();
    BalanceEntry entry{i, a == b, std::nullopt};
    if (a != b) entry.larger = to_parent(a > b ? local[i].side_a : local[i].side_b);
    table.entries.push_back(std::move(entry));
  }
  return table;
}

Cube invariant_cube(const Hyperplanes& h, const ActionGenerators& gens, std::optional<InvariantCubeTrace>* trace) {
  const Graph& g = h.graph();
  const VertexSet seed_orbit = orbit(g, gens, 0);
  const VertexSet hull = h.convex_hull(seed_orbit);
  BalanceTable table = classify_hyperplanes(h, hull);

  VertexSet q = hull;
  for (const auto& entry : table.entries) {
    if (entry.larger) q &= *entry.larger;
  }

  if (q.none()) throw InternalError("larger halfspaces have empty intersection");
  const auto vertices = members(q);
  if (!induces_cube(g, vertices)) throw InternalError("intersection of larger halfspaces is not a cube");
  for (const auto& a : gens) {
    if (a.apply(q) != q) throw InternalError("invariant cube is moved by a generator");
  }
  if (trace) trace->emplace(InvariantCubeTrace{seed_orbit, hull, std::move(table)});
  return Cube{std::countr_zero(vertices.size()), vertices};
}

bool is_flippable(const Hyperplanes& h, std::size_t plane, const ActionGenerators& gens,
                  std::optional<std::size_t> max_word_length) {
  std::vector<Automorphism> moves = gens;
  for (const auto& a : gens) moves.push_back(a.inverse());
  for (int s = 0; s < 2; ++s) {
    const VertexSet& d = h[plane].side(s);
    const VertexSet& complement = h[plane].side(1 - s);
    std::set<VertexSet> seen{d};
    std::vector<VertexSet> layer{d};
    for (std::size_t length = 1; !layer.empty(); ++length) {
      if (max_word_length && length > *max_word_length) break;
      std::vector<VertexSet> next;
      for (const auto& image : layer) {
        for (const auto& a : moves) {
          VertexSet moved = a.apply(image);
          if (moved.is_subset_of(complement)) return true;
          if (seen.insert(moved).second) next.push_back(std::move(moved));
        }
      }
      layer = std::move(next);
    }
  }
  return false;
}

}  // namespace medianforge
