#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distdom/errors.hpp"
#include "distdom/vertex_set.hpp"

namespace distdom {

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

/// Immutable simple undirected graph. Adjacency lists are sorted and
/// symmetric; the factory functions are the only way to build one.
class graph {
 public:
  graph() = default;

  /// Builds from an edge list. Duplicates collapse; self-loops and
  /// out-of-range endpoints throw std::invalid_argument.
  static graph from_edges(std::size_t vertex_count,
                          std::span<const std::pair<vertex_t, vertex_t>> edges) {
    graph g;
    g.adj_.assign(vertex_count, {});
    for (auto [u, v] : edges) {
      if (u >= vertex_count || v >= vertex_count)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
  }

  static graph from_edges(std::size_t vertex_count,
                          const std::vector<std::pair<vertex_t, vertex_t>>& edges) {
    return from_edges(vertex_count, std::span<const std::pair<vertex_t, vertex_t>>(edges));
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& nbrs : adj_) twice += nbrs.size();
    return twice / 2;
  }
  std::span<const vertex_t> neighbors(vertex_t v) const { return adj_.at(v); }
  std::size_t degree(vertex_t v) const { return adj_.at(v).size(); }
  bool has_edge(vertex_t u, vertex_t v) const {
    const auto& nbrs = adj_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// Each undirected edge once, as (smaller, larger), in lexicographic order.
  std::vector<std::pair<vertex_t, vertex_t>> edges() const {
    std::vector<std::pair<vertex_t, vertex_t>> out;
    for (vertex_t u = 0; u < adj_.size(); ++u)
      for (vertex_t v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const graph&, const graph&) = default;

 private:
  std::vector<std::vector<vertex_t>> adj_;
};

/// Parses "u v" lines. '#' lines and blank lines are skipped; an optional
/// "n <count>" line declares the vertex count.
inline graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  std::size_t declared = 0;
  bool has_declared = false;
  std::size_t max_index_plus_one = 0;

  auto parse_index = [](std::string_view tok, std::size_t line) -> vertex_t {
    if (!tok.empty() && tok.front() == '-') throw parse_error(line, "negative index '" + std::string(tok) + "'");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw parse_error(line, "unparsable token '" + std::string(tok) + "'");
    return static_cast<vertex_t>(value);
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.front() == "n") {
      if (tokens.size() != 2) throw parse_error(line_no, "header must be 'n <count>'");
      if (has_declared) throw parse_error(line_no, "duplicate 'n' header");
      declared = parse_index(tokens[1], line_no);
      has_declared = true;
      continue;
    }
    if (tokens.size() != 2) throw parse_error(line_no, "expected two vertex indices");
    vertex_t u = parse_index(tokens[0], line_no);
    vertex_t v = parse_index(tokens[1], line_no);
    if (u == v) throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
    max_index_plus_one = std::max({max_index_plus_one, u + 1, v + 1});
  }

  if (has_declared && declared < max_index_plus_one)
    throw parse_error(line_no, "declared vertex count " + std::to_string(declared) +
                                   " is smaller than max index + 1 = " +
                                   std::to_string(max_index_plus_one));
  return graph::from_edges(has_declared ? declared : max_index_plus_one, edges);
}

/// Inverse of parse_edge_list; always writes the "n" header.
inline std::string to_edge_list(const graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

/// Unweighted distances from `source`; `unreachable` for other components.
/// With `limit`, vertices beyond that distance are also left unreachable.
inline std::vector<std::size_t> bfs_distances(const graph& g, vertex_t source,
                                              std::size_t limit = unreachable) {
  std::vector<std::size_t> dist(g.vertex_count(), unreachable);
  std::vector<vertex_t> queue{source};
  dist.at(source) = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    vertex_t u = queue[head];
    if (dist[u] == limit) continue;
    for (vertex_t w : g.neighbors(u)) {
      if (dist[w] == unreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == unreachable; });
}

inline void require_connected(const graph& g) {
  if (!is_connected(g)) throw disconnected_error();
}

/// Requires a connected graph.
inline std::size_t eccentricity(const graph& g, vertex_t v) {
  auto dist = bfs_distances(g, v);
  std::size_t ecc = 0;
  for (auto d : dist) {
    if (d == unreachable) throw disconnected_error();
    ecc = std::max(ecc, d);
  }
  return ecc;
}

inline std::size_t diameter(const graph& g) {
  std::size_t best = 0;
  for (vertex_t v = 0; v < g.vertex_count(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

inline std::size_t radius(const graph& g) {
  std::size_t best = unreachable;
  for (vertex_t v = 0; v < g.vertex_count(); ++v) best = std::min(best, eccentricity(g, v));
  return g.vertex_count() == 0 ? 0 : best;
}

struct bipartition {
  std::vector<std::uint8_t> side;  // 1 or 2 per vertex
  std::size_t v1_count = 0;
  std::size_t v2_count = 0;

  bool in_v1(vertex_t v) const { return side.at(v) == 1; }

  bipartition swapped() const {
    bipartition b = *this;
    for (auto& s : b.side) s = static_cast<std::uint8_t>(3 - s);
    std::swap(b.v1_count, b.v2_count);
    return b;
  }

  friend bool operator==(const bipartition&, const bipartition&) = default;
};

/// BFS 2-coloring per component. The lowest-indexed vertex of each
/// component gets side 1.
inline bipartition two_color(const graph& g) {
  const std::size_t n = g.vertex_count();
  bipartition b;
  b.side.assign(n, 0);
  std::vector<vertex_t> queue;
  queue.reserve(n);
  for (vertex_t root = 0; root < n; ++root) {
    if (b.side[root] != 0) continue;
    b.side[root] = 1;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      vertex_t u = queue[head];
      for (vertex_t w : g.neighbors(u)) {
        if (b.side[w] == 0) {
          b.side[w] = static_cast<std::uint8_t>(3 - b.side[u]);
          queue.push_back(w);
        } else if (b.side[w] == b.side[u]) {
          throw not_bipartite_error(u);
        }
      }
    }
  }
  b.v1_count = static_cast<std::size_t>(std::count(b.side.begin(), b.side.end(), 1));
  b.v2_count = n - b.v1_count;
  return b;
}

inline bool is_valid_bipartition(const graph& g, const bipartition& b) {
  if (b.side.size() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (b.side[u] == b.side[v]) return false;
  return std::all_of(b.side.begin(), b.side.end(), [](auto s) { return s == 1 || s == 2; });
}

struct distance_layers {
  vertex_t origin = 0;
  std::vector<std::vector<vertex_t>> layers;  // layers[l] = sorted vertices at distance l
  bool exhausted = false;                     // N_kmax[origin] is the whole component

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& l : layers) out.push_back(l.size());
    return out;
  }
};

inline distance_layers bfs_layers(const graph& g, vertex_t v, std::size_t kmax) {
  distance_layers out;
  out.origin = v;
  out.layers.assign(kmax + 1, {});
  auto dist = bfs_distances(g, v, kmax + 1);
  out.exhausted = true;
  for (vertex_t u = 0; u < g.vertex_count(); ++u) {
    if (dist[u] == unreachable) continue;
    if (dist[u] <= kmax)
      out.layers[dist[u]].push_back(u);
    else
      out.exhausted = false;
  }
  return out;
}

struct neighborhood_split {
  std::size_t in_v1 = 0;  // |N_k(v) ∩ V1|, v itself excluded
  std::size_t in_v2 = 0;
  bool closed_is_all = false;  // N_k[v] = V

  friend bool operator==(const neighborhood_split&, const neighborhood_split&) = default;
};

inline neighborhood_split k_neighborhood_split(const graph& g, const bipartition& b, vertex_t v,
                                               std::size_t k) {
  auto dist = bfs_distances(g, v, k);
  neighborhood_split s;
  std::size_t reached = 0;
  for (vertex_t u = 0; u < g.vertex_count(); ++u) {
    if (dist[u] == unreachable || dist[u] > k) continue;
    ++reached;
    if (u == v) continue;
    (b.in_v1(u) ? s.in_v1 : s.in_v2) += 1;
  }
  s.closed_is_all = reached == g.vertex_count();
  return s;
}

/// G^k: u ~ w iff 0 < d(u, w) <= k. Materialized.
inline graph power_graph(const graph& g, std::size_t k) {
  if (k == 0) throw precondition_error("power graph needs k >= 1");
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (vertex_t v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_distances(g, v, k);
    for (vertex_t u = v + 1; u < g.vertex_count(); ++u)
      if (dist[u] != unreachable) edges.emplace_back(v, u);
  }
  return graph::from_edges(g.vertex_count(), edges);
}

/// Closed k-neighborhoods as bitsets, one per vertex.
inline std::vector<vertex_set> closed_k_neighborhoods(const graph& g, std::size_t k) {
  std::vector<vertex_set> out;
  out.reserve(g.vertex_count());
  for (vertex_t v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_distances(g, v, k);
    vertex_set s(g.vertex_count());
    for (vertex_t u = 0; u < g.vertex_count(); ++u)
      if (dist[u] != unreachable) s.insert(u);
    out.push_back(std::move(s));
  }
  return out;
}

/// Vertices within distance k of some member of `sources`.
inline vertex_set k_reach(const graph& g, const vertex_set& sources, std::size_t k) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n, unreachable);
  std::vector<vertex_t> queue = sources.members();
  for (vertex_t s : queue) dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    vertex_t u = queue[head];
    if (dist[u] == k) continue;
    for (vertex_t w : g.neighbors(u)) {
      if (dist[w] == unreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  vertex_set reached(n);
  for (vertex_t u : queue) reached.insert(u);
  return reached;
}

inline bool is_k_dominating(const graph& g, const vertex_set& s, std::size_t k) {
  return k_reach(g, s, k).is_full();
}

}  // namespace distdom
