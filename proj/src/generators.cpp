#include "medianforge/generators.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "medianforge/errors.hpp"

namespace medianforge {

namespace {

std::string padded(std::size_t value, std::size_t count) {
  const std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  std::string s = std::to_string(value);
  return std::string(width - s.size(), '0') + s;
}

void require(bool ok, std::string_view family, const char* what) {
  if (!ok) throw InputError(std::string(family) + ": " + what);
}

Graph hypercube(int n) {
  require(n >= 1 && n <= 16, "hypercube", "dimension must be in [1, 16]");
  const std::size_t count = std::size_t{1} << n;
  auto label = [n](std::size_t bits) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
      if (bits >> (n - 1 - i) & 1U) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
  };
  std::vector<std::string> names;
  std::vector<NamedEdge> edges;
  for (std::size_t v = 0; v < count; ++v) {
    names.push_back(label(v));
    for (int b = 0; b < n; ++b) {
      const std::size_t w = v ^ (std::size_t{1} << b);
      if (v < w) edges.emplace_back(label(v), label(w));
    }
  }
  return Graph(std::move(names), edges);
}

Graph grid(std::span<const int> dims) {
  require(!dims.empty(), "grid", "at least one dimension required");
  std::size_t count = 1;
  for (int d : dims) {
    require(d >= 1 && d <= 1000, "grid", "dimensions must be in [1, 1000]");
    count *= static_cast<std::size_t>(d);
    require(count <= 1'000'000, "grid", "too many vertices");
  }
  auto label = [&](std::size_t index) {
    std::string s;
    for (std::size_t axis = dims.size(); axis-- > 0;) {
      const auto d = static_cast<std::size_t>(dims[axis]);
      std::string part = padded(index % d, d);
      s = axis == 0 ? part + s : "_" + part + s;
      index /= d;
    }
    return s;
  };
  std::vector<std::string> names;
  std::vector<NamedEdge> edges;
  for (std::size_t v = 0; v < count; ++v) {
    names.push_back(label(v));
    std::size_t stride = 1;
    for (std::size_t axis = dims.size(); axis-- > 0;) {
      const auto d = static_cast<std::size_t>(dims[axis]);
      if ((v / stride) % d + 1 < d) edges.emplace_back(label(v), label(v + stride));
      stride *= d;
    }
  }
  return Graph(std::move(names), edges);
}

Graph random_tree(int n, std::optional<std::uint64_t> seed) {
  require(n >= 1 && n <= 1'000'000, "random_tree", "size must be in [1, 1000000]");
  require(seed.has_value(), "random_tree", "a seed is required");
  const auto count = static_cast<std::size_t>(n);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < count; ++v) names.push_back("t" + padded(v, count));
  std::vector<NamedEdge> edges;
  if (count == 2) edges.emplace_back(names[0], names[1]);
  if (count > 2) {
    std::mt19937_64 rng(*seed);
    std::vector<std::size_t> prufer(count - 2);
    for (auto& p : prufer) p = uniform_below(rng, count);
    std::vector<std::size_t> degree(count, 1);
    for (auto p : prufer) ++degree[p];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
    for (std::size_t v = 0; v < count; ++v) {
      if (degree[v] == 1) leaves.push(v);
    }
    for (auto p : prufer) {
      const std::size_t leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(names[leaf], names[p]);
      if (--degree[p] == 1) leaves.push(p);
    }
    const std::size_t a = leaves.top();
    leaves.pop();
    edges.emplace_back(names[a], names[leaves.top()]);
  }
  return Graph(std::move(names), edges);
}

Graph cycle(int n) {
  require(n >= 3 && n <= 1'000'000, "cycle", "length must be in [3, 1000000]");
  const auto count = static_cast<std::size_t>(n);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < count; ++v) names.push_back("c" + padded(v, count));
  std::vector<NamedEdge> edges;
  for (std::size_t v = 0; v < count; ++v) edges.emplace_back(names[v], names[(v + 1) % count]);
  return Graph(std::move(names), edges);
}

Graph complete_bipartite(int p, int q) {
  require(p >= 1 && q >= 1 && p <= 2000 && q <= 2000, "complete_bipartite",
          "sides must be in [1, 2000]");
  std::vector<std::string> names;
  std::vector<NamedEdge> edges;
  for (int i = 0; i < p; ++i) names.push_back("a" + padded(static_cast<std::size_t>(i), static_cast<std::size_t>(p)));
  for (int j = 0; j < q; ++j) names.push_back("b" + padded(static_cast<std::size_t>(j), static_cast<std::size_t>(q)));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(p + j)]);
    }
  }
  return Graph(std::move(names), edges);
}

Graph star(int k) {
  require(k >= 0 && k <= 1'000'000, "star", "leaf count must be in [0, 1000000]");
  std::vector<std::string> names{"h"};
  std::vector<NamedEdge> edges;
  for (int i = 0; i < k; ++i) {
    names.push_back("l" + padded(static_cast<std::size_t>(i), static_cast<std::size_t>(k)));
    edges.emplace_back("h", names.back());
  }
  return Graph(std::move(names), edges);
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InputError("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

Graph generate(std::string_view family, std::span<const int> params,
               std::optional<std::uint64_t> seed) {
  auto arity = [&](std::size_t expected) {
    require(params.size() == expected, family,
            ("expects " + std::to_string(expected) + " parameter(s)").c_str());
  };
  if (family == "hypercube") {
    arity(1);
    return hypercube(params[0]);
  }
  if (family == "grid") return grid(params);
  if (family == "random_tree") {
    arity(1);
    return random_tree(params[0], seed);
  }
  if (family == "cycle") {
    arity(1);
    return cycle(params[0]);
  }
  if (family == "complete_bipartite") {
    arity(2);
    return complete_bipartite(params[0], params[1]);
  }
  if (family == "star") {
    arity(1);
    return star(params[0]);
  }
  throw InputError("unsupported graph family '" + std::string(family) + "'");
}

}  // namespace medianforge
