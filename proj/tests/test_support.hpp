#pragma once

// Test-only oracles. Nothing here calls into the code paths it is used to
// check: distances come from Floyd-Warshall, domination numbers from plain
// subset enumeration over a distance matrix, minima from a zooming grid.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "distdom/graph.hpp"
#include "distdom/random.hpp"

namespace distdom::testing {

inline graph make_graph(std::size_t n, std::vector<std::pair<vertex_t, vertex_t>> edges) {
  return graph::from_edges(n, edges);
}

inline graph cycle(std::size_t n) {
  std::vector<std::pair<vertex_t, vertex_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graph::from_edges(n, e);
}

inline graph path(std::size_t n) {
  std::vector<std::pair<vertex_t, vertex_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return graph::from_edges(n, e);
}

inline graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<vertex_t, vertex_t>> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return graph::from_edges(a + b, e);
}

inline graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

/// Erdos-Renyi G(n, p), not necessarily connected or bipartite.
inline graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  rng r(seed);
  std::vector<std::pair<vertex_t, vertex_t>> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (unit_double(r) < p) e.emplace_back(u, v);
  return graph::from_edges(n, e);
}

/// Connected G(n, p): a random tree plus extra edges.
inline graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  rng r(seed);
  std::vector<std::pair<vertex_t, vertex_t>> e;
  for (std::size_t v = 1; v < n; ++v) e.emplace_back(v, uniform_below(r, v));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (unit_double(r) < p) e.emplace_back(u, v);
  return graph::from_edges(n, e);
}

constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;

inline std::vector<std::vector<std::size_t>> floyd_warshall(const graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (auto w : g.neighbors(v)) d[v][w] = 1;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  return d;
}

/// gamma_k by trying every subset in order of size. n <= 20.
inline std::size_t brute_force_gamma(const graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  const auto d = floyd_warshall(g);
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      bool hit = false;
      for (std::size_t s = 0; s < n && !hit; ++s)
        if (((mask >> s) & 1U) && d[s][v] <= k) hit = true;
      ok = hit;
    }
    if (ok) best = size;
  }
  return best;
}

struct grid_minimum {
  double p1, p2, value;
};

/// Minimum over [0,1]^2 by repeated 201x201 grids, each zoomed onto a
/// neighborhood of the previous best.
template <typename F>
grid_minimum zoom_grid_min(F&& f, int rounds = 14) {
  double lo1 = 0, hi1 = 1, lo2 = 0, hi2 = 1;
  grid_minimum best{0, 0, f(0.0, 0.0)};
  constexpr int cells = 200;
  for (int round = 0; round < rounds; ++round) {
    const double s1 = (hi1 - lo1) / cells, s2 = (hi2 - lo2) / cells;
    for (int i = 0; i <= cells; ++i) {
      for (int j = 0; j <= cells; ++j) {
        const double x = lo1 + i * s1, y = lo2 + j * s2;
        const double v = f(x, y);
        if (v < best.value) best = {x, y, v};
      }
    }
    lo1 = std::max(0.0, best.p1 - 4 * s1);
    hi1 = std::min(1.0, best.p1 + 4 * s1);
    lo2 = std::max(0.0, best.p2 - 4 * s2);
    hi2 = std::min(1.0, best.p2 + 4 * s2);
  }
  return best;
}

}  // namespace distdom::testing
