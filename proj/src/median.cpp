#include "medianforge/median.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace medianforge {

VertexSet interval(const Graph& g, Vertex x, Vertex y) {
  VertexSet out(g.order());
  const int dxy = g.distance(x, y);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.distance(x, v) + g.distance(v, y) == dxy) out.set(v);
  }
  return out;
}

std::vector<Vertex> median_candidates(const Graph& g, Vertex x, Vertex y, Vertex z) {
  return members(interval(g, x, y) & interval(g, y, z) & interval(g, z, x));
}

Vertex median(const Graph& g, Vertex x, Vertex y, Vertex z) {
  auto candidates = median_candidates(g, x, y, z);
  const std::string triple = "(" + g.name(x) + ", " + g.name(y) + ", " + g.name(z) + ")";
  if (candidates.empty()) throw NoMedianError("no median for " + triple);
  if (candidates.size() > 1) {
    throw NotUniqueMedianError(std::to_string(candidates.size()) + " medians for " + triple,
                               std::move(candidates));
  }
  return candidates.front();
}

namespace {

using Triple = std::array<Vertex, 3>;

// First failing triple (x, y, z) with y < z for this x, scanning y then z.
std::optional<Triple> first_failure_at(const Graph& g, Vertex x) {
  const std::size_t n = g.order();
  // Interval I(x,y) bucketed by distance from x; a median of (x,y,z) must sit
  // in bucket (d(x,y) + d(x,z) - d(y,z)) / 2 and at distance d(x,z) - k from z.
  std::vector<Vertex> bucketed(n);
  std::vector<std::size_t> start;
  for (Vertex y = x + 1; y < n; ++y) {
    const int dxy = g.distance(x, y);
    start.assign(static_cast<std::size_t>(dxy) + 2, 0);
    for (Vertex v = 0; v < n; ++v) {
      const int dxv = g.distance(x, v);
      if (dxv + g.distance(v, y) == dxy) ++start[static_cast<std::size_t>(dxv) + 1];
    }
    for (std::size_t k = 1; k < start.size(); ++k) start[k] += start[k - 1];
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (Vertex v = 0; v < n; ++v) {
      const int dxv = g.distance(x, v);
      if (dxv + g.distance(v, y) == dxy) bucketed[fill[static_cast<std::size_t>(dxv)]++] = v;
    }

    for (Vertex z = y + 1; z < n; ++z) {
      const int dxz = g.distance(x, z);
      const int twice_k = dxy + dxz - g.distance(y, z);
      int found = 0;
      if (twice_k % 2 == 0) {
        const int k = twice_k / 2;
        if (k >= 0 && k <= dxy) {
          for (std::size_t i = start[k]; i < start[k + 1] && found < 2; ++i) {
            if (g.distance(z, bucketed[i]) == dxz - k) ++found;
          }
        }
      }
      if (found != 1) return Triple{x, y, z};
    }
  }
  return std::nullopt;
}

}  // namespace

MedianReport medianness_oracle(const Graph& g, unsigned jobs) {
  const std::size_t n = g.order();
  if (n >= 1) (void)g.distance(0, 0);  // build the table before fanning out

  std::atomic<std::size_t> best_x{n};
  std::optional<Triple> best;
  std::mutex best_mutex;

  auto worker = [&](unsigned lane, unsigned lanes) {
    for (Vertex x = lane; x < n; x += lanes) {
      if (x >= best_x.load(std::memory_order_relaxed)) return;
      if (auto fail = first_failure_at(g, x)) {
        std::lock_guard lock(best_mutex);
        if (!best || *fail < *best) {
          best = fail;
          best_x.store((*best)[0], std::memory_order_relaxed);
        }
        return;
      }
    }
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned lane = 0; lane < jobs; ++lane) pool.emplace_back(worker, lane, jobs);
  }

  MedianReport report;
  if (best) {
    report.verdict = false;
    const auto& [x, y, z] = *best;
    report.witness = MedianWitness{*best, median_candidates(g, x, y, z)};
  }
  return report;
}

}  // namespace medianforge
