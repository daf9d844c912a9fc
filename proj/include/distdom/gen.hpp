#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distdom/errors.hpp"
#include "distdom/graph.hpp"
#include "distdom/random.hpp"

namespace distdom {

enum class graph_family { path, cycle, complete_bipartite, grid2d, random_bipartite };

inline std::string_view to_string(graph_family f) {
  switch (f) {
    case graph_family::path: return "path";
    case graph_family::cycle: return "cycle";
    case graph_family::complete_bipartite: return "complete_bipartite";
    case graph_family::grid2d: return "grid2d";
    case graph_family::random_bipartite: return "random_bipartite";
  }
  return "unknown";
}

/// path:n | cycle:n | complete_bipartite:a,b | grid2d:r,c |
/// random_bipartite:n1,n2,d1,d2,extra
struct gen_spec {
  graph_family family = graph_family::path;
  std::vector<std::int64_t> params;
  double extra = 0.0;  // random_bipartite only
  std::uint64_t seed = 0;

  std::string to_string() const {
    std::string out(distdom::to_string(family));
    out += ':';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(params[i]);
    }
    if (family == graph_family::random_bipartite) out += ',' + std::to_string(extra);
    return out;
  }
};

inline gen_spec parse_gen_spec(std::string_view text, std::uint64_t seed = 0) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw precondition_error("generator spec must be FAMILY:ARGS, got '" + std::string(text) + "'");
  auto name = text.substr(0, colon);
  gen_spec spec;
  spec.seed = seed;
  std::size_t arity = 0;
  if (name == "path") {
    spec.family = graph_family::path;
    arity = 1;
  } else if (name == "cycle") {
    spec.family = graph_family::cycle;
    arity = 1;
  } else if (name == "complete_bipartite" || name == "kbip") {
    spec.family = graph_family::complete_bipartite;
    arity = 2;
  } else if (name == "grid2d" || name == "grid") {
    spec.family = graph_family::grid2d;
    arity = 2;
  } else if (name == "random_bipartite") {
    spec.family = graph_family::random_bipartite;
    arity = 4;
  } else {
    throw precondition_error("unknown graph family '" + std::string(name) + "'");
  }

  std::vector<std::string_view> fields;
  auto rest = text.substr(colon + 1);
  while (true) {
    auto comma = rest.find(',');
    fields.push_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  const std::size_t expected = arity + (spec.family == graph_family::random_bipartite ? 1 : 0);
  if (fields.size() != expected)
    throw precondition_error("family '" + std::string(name) + "' takes " + std::to_string(expected) +
                             " arguments");
  for (std::size_t i = 0; i < arity; ++i) {
    std::int64_t v = 0;
    auto f = fields[i];
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (ec != std::errc{} || ptr != f.data() + f.size() || v < 1)
      throw precondition_error("generator argument '" + std::string(f) + "' must be a positive integer");
    spec.params.push_back(v);
  }
  if (spec.family == graph_family::random_bipartite) {
    try {
      std::size_t used = 0;
      std::string s(fields.back());
      spec.extra = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw precondition_error("edge probability '" + std::string(fields.back()) + "' is not a number");
    }
  }
  return spec;
}

namespace detail {

inline graph random_bipartite(std::int64_t n1, std::int64_t n2, std::int64_t d1, std::int64_t d2,
                              double extra, std::uint64_t seed) {
  if (d1 > n2 || d2 > n1)
    throw precondition_error("degree demand exceeds the opposite part size");
  if (!(extra >= 0.0 && extra <= 1.0)) throw precondition_error("edge probability outside [0, 1]");
  const auto a = static_cast<std::size_t>(n1);
  const auto b = static_cast<std::size_t>(n2);
  rng r(seed);
  std::vector<std::vector<char>> adj(a, std::vector<char>(b, 0));
  std::vector<std::size_t> deg1(a, 0), deg2(b, 0);
  auto link = [&](std::size_t i, std::size_t j) {
    if (adj[i][j]) return;
    adj[i][j] = 1;
    ++deg1[i];
    ++deg2[j];
  };

  // Random spanning tree with every edge crossing the parts.
  std::vector<std::size_t> left(a), right(b);
  for (std::size_t i = 0; i < a; ++i) left[i] = i;
  for (std::size_t j = 0; j < b; ++j) right[j] = j;
  shuffle(left, r);
  shuffle(right, r);
  link(left[0], right[0]);
  std::vector<std::size_t> in_left{left[0]}, in_right{right[0]};
  std::vector<std::pair<bool, std::size_t>> pending;
  for (std::size_t i = 1; i < a; ++i) pending.emplace_back(true, left[i]);
  for (std::size_t j = 1; j < b; ++j) pending.emplace_back(false, right[j]);
  shuffle(pending, r);
  for (auto [is_left, x] : pending) {
    if (is_left) {
      link(x, in_right[uniform_below(r, in_right.size())]);
      in_left.push_back(x);
    } else {
      link(in_left[uniform_below(r, in_left.size())], x);
      in_right.push_back(x);
    }
  }

  // Raise minimum degrees; adding edges never lowers the other side.
  for (std::size_t i = 0; i < a; ++i) {
    while (deg1[i] < static_cast<std::size_t>(d1)) {
      std::vector<std::size_t> options;
      for (std::size_t j = 0; j < b; ++j)
        if (!adj[i][j]) options.push_back(j);
      link(i, options[uniform_below(r, options.size())]);
    }
  }
  for (std::size_t j = 0; j < b; ++j) {
    while (deg2[j] < static_cast<std::size_t>(d2)) {
      std::vector<std::size_t> options;
      for (std::size_t i = 0; i < a; ++i)
        if (!adj[i][j]) options.push_back(i);
      link(options[uniform_below(r, options.size())], j);
    }
  }
  if (extra > 0.0) {
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j)
        if (!adj[i][j] && unit_double(r) < extra) link(i, j);
  }

  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (adj[i][j]) edges.emplace_back(i, a + j);
  return graph::from_edges(a + b, edges);
}

}  // namespace detail

/// Random bipartite graphs put V1 at 0..n1-1 and V2 at n1..n1+n2-1; they
/// are connected and meet their degree demands.
inline graph generate(const gen_spec& spec) {
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (auto v : spec.params)
    if (v < 1) throw precondition_error("generator parameters must be positive");
  auto arg = [&](std::size_t i) {
    if (i >= spec.params.size()) throw precondition_error("missing generator parameter");
    return static_cast<std::size_t>(spec.params[i]);
  };
  switch (spec.family) {
    case graph_family::path: {
      const auto n = arg(0);
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return graph::from_edges(n, edges);
    }
    case graph_family::cycle: {
      const auto n = arg(0);
      if (n < 3) throw precondition_error("cycle needs at least 3 vertices");
      for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      return graph::from_edges(n, edges);
    }
    case graph_family::complete_bipartite: {
      const auto a = arg(0), b = arg(1);
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) edges.emplace_back(i, a + j);
      return graph::from_edges(a + b, edges);
    }
    case graph_family::grid2d: {
      const auto rows = arg(0), cols = arg(1);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          if (j + 1 < cols) edges.emplace_back(i * cols + j, i * cols + j + 1);
          if (i + 1 < rows) edges.emplace_back(i * cols + j, (i + 1) * cols + j);
        }
      }
      return graph::from_edges(rows * cols, edges);
    }
    case graph_family::random_bipartite:
      return detail::random_bipartite(spec.params.at(0), spec.params.at(1), spec.params.at(2),
                                      spec.params.at(3), spec.extra, spec.seed);
  }
  throw precondition_error("unknown graph family");
}

}  // namespace distdom
