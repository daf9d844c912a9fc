#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "distdom/errors.hpp"
#include "distdom/graph.hpp"
#include "distdom/random.hpp"
#include "distdom/vertex_set.hpp"

namespace distdom {

enum class construction_method { exact, greedy, randomized };

inline std::string_view to_string(construction_method m) {
  switch (m) {
    case construction_method::exact: return "exact";
    case construction_method::greedy: return "greedy";
    case construction_method::randomized: return "randomized";
  }
  return "unknown";
}

struct dominating_set {
  vertex_set members;
  std::size_t k = 0;
  construction_method method = construction_method::exact;

  std::size_t size() const { return members.size(); }
};

inline constexpr std::uint64_t default_node_budget = 10'000'000;

/// Largest graph handed to the subset-enumeration search.
inline constexpr std::size_t exhaustive_limit = 24;

namespace detail {

inline std::vector<vertex_t> greedy_cover(const std::vector<vertex_set>& cover, std::size_t n) {
  std::vector<vertex_t> picked;
  vertex_set covered(n);
  while (covered.size() < n) {
    vertex_t best = 0;
    std::size_t best_gain = 0;
    for (vertex_t c = 0; c < n; ++c) {
      std::size_t gain = cover[c].count_missing_from(covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    picked.push_back(best);
    covered |= cover[best];
  }
  return picked;
}

/// Minimum set cover by closed neighborhoods. Branches on the uncovered
/// vertex with the fewest remaining coverers; coverers are tried by
/// descending gain and excluded from later sibling branches.
class cover_search {
 public:
  cover_search(const std::vector<vertex_set>& cover, std::size_t n, std::uint64_t budget)
      : cover_(cover), n_(n), budget_(budget) {}

  struct budget_hit {};

  std::vector<vertex_t> solve(std::vector<vertex_t> incumbent) {
    best_ = std::move(incumbent);
    chosen_.clear();
    descend(vertex_set(n_), vertex_set(n_));
    return best_;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<vertex_t>& best() const noexcept { return best_; }

 private:
  void descend(const vertex_set& covered, vertex_set excluded) {
    if (++nodes_ > budget_) throw budget_hit{};
    const std::size_t uncovered = n_ - covered.size();
    if (uncovered == 0) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + 1 >= best_.size()) return;

    std::vector<std::size_t> gain(n_, 0);
    std::size_t max_gain = 0;
    for (vertex_t c = 0; c < n_; ++c) {
      if (excluded.contains(c)) continue;
      gain[c] = cover_[c].count_missing_from(covered);
      max_gain = std::max(max_gain, gain[c]);
    }
    if (max_gain == 0) return;
    if (chosen_.size() + (uncovered + max_gain - 1) / max_gain >= best_.size()) return;

    vertex_t pivot = 0;
    std::size_t fewest = unreachable;
    for (vertex_t u = 0; u < n_; ++u) {
      if (covered.contains(u)) continue;
      std::size_t options = cover_[u].count_missing_from(excluded);
      if (options < fewest) {
        fewest = options;
        pivot = u;
      }
    }
    if (fewest == 0) return;

    std::vector<vertex_t> candidates;
    for (vertex_t c : cover_[pivot].members())
      if (!excluded.contains(c)) candidates.push_back(c);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](vertex_t a, vertex_t b) { return gain[a] > gain[b]; });

    for (vertex_t c : candidates) {
      chosen_.push_back(c);
      descend(covered | cover_[c], excluded);
      chosen_.pop_back();
      excluded.insert(c);
    }
  }

  const std::vector<vertex_set>& cover_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<vertex_t> best_;
  std::vector<vertex_t> chosen_;
};

inline std::optional<std::vector<vertex_t>> exhaustive_cover(const std::vector<vertex_set>& cover,
                                                             std::size_t n) {
  if (n > exhaustive_limit) return std::nullopt;
  if (n == 0) return std::vector<vertex_t>{};
  std::vector<std::uint32_t> masks(n, 0);
  for (vertex_t v = 0; v < n; ++v)
    for (vertex_t u : cover[v].members()) masks[v] |= std::uint32_t{1} << u;
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  for (std::size_t size = 1; size <= n; ++size) {
    // Gosper's hack: subsets of exactly `size` elements in increasing order.
    std::uint32_t subset = (std::uint32_t{1} << size) - 1;
    while (subset <= all) {
      std::uint32_t covered = 0;
      for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1)
        covered |= masks[static_cast<std::size_t>(std::countr_zero(rest))];
      if (covered == all) {
        std::vector<vertex_t> out;
        for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1)
          out.push_back(static_cast<vertex_t>(std::countr_zero(rest)));
        return out;
      }
      std::uint32_t low = subset & (~subset + 1);
      std::uint32_t ripple = subset + low;
      if (ripple == 0 || ripple > all) break;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

}  // namespace detail

struct exact_result {
  std::size_t gamma = 0;
  dominating_set witness;
  std::uint64_t nodes = 0;
  bool exhaustive_fallback = false;
};

/// gamma_k(G) as a minimum dominating set of G^k, by branch and bound
/// seeded with the greedy cover. Graphs with at most `exhaustive_limit`
/// vertices fall back to subset enumeration if the budget runs out.
inline exact_result gamma_k_exact(const graph& g, std::size_t k,
                                  std::uint64_t node_budget = default_node_budget) {
  if (k == 0) throw precondition_error("k must be >= 1");
  require_connected(g);
  const std::size_t n = g.vertex_count();
  auto cover = closed_k_neighborhoods(g, k);

  exact_result result;
  result.witness.k = k;
  result.witness.method = construction_method::exact;
  if (n == 0) {
    result.witness.members = vertex_set(0);
    return result;
  }

  std::size_t widest = 0;
  for (const auto& c : cover) widest = std::max(widest, c.size());
  const std::size_t root_lower = (n + widest - 1) / widest;

  detail::cover_search search(cover, n, node_budget);
  std::vector<vertex_t> best;
  try {
    best = search.solve(detail::greedy_cover(cover, n));
    result.nodes = search.nodes();
  } catch (const detail::cover_search::budget_hit&) {
    auto fallback = detail::exhaustive_cover(cover, n);
    if (!fallback) throw budget_exhausted_error(root_lower, search.best().size(), node_budget);
    best = std::move(*fallback);
    result.nodes = node_budget;
    result.exhaustive_fallback = true;
  }
  result.gamma = best.size();
  result.witness.members = vertex_set::of(n, best);
  return result;
}

/// Subset enumeration by ascending cardinality. n <= exhaustive_limit.
inline dominating_set min_dominating_exhaustive(const graph& g, std::size_t k) {
  if (g.vertex_count() > exhaustive_limit)
    throw precondition_error("exhaustive search limited to " + std::to_string(exhaustive_limit) +
                             " vertices");
  auto cover = closed_k_neighborhoods(g, k);
  auto best = detail::exhaustive_cover(cover, g.vertex_count());
  if (!best) throw precondition_error("no dominating set found");
  return {vertex_set::of(g.vertex_count(), *best), k, construction_method::exact};
}

inline dominating_set greedy_construct(const graph& g, std::size_t k) {
  require_connected(g);
  auto cover = closed_k_neighborhoods(g, k);
  auto picked = detail::greedy_cover(cover, g.vertex_count());
  return {vertex_set::of(g.vertex_count(), picked), k, construction_method::greedy};
}

inline void check_probabilities(const graph& g, std::span<const double> p) {
  if (p.size() != g.vertex_count())
    throw precondition_error("probability vector has " + std::to_string(p.size()) +
                             " entries for " + std::to_string(g.vertex_count()) + " vertices");
  for (double x : p)
    if (!(x >= 0.0 && x <= 1.0)) throw precondition_error("probability outside [0, 1]");
}

/// sum_i p_i + (1 - p_i) * prod_{j in N_k(i)} (1 - p_j): the expected size
/// of the randomized construction below.
inline double expected_size(const graph& g, std::size_t k, std::span<const double> p) {
  check_probabilities(g, p);
  double total = 0.0;
  for (vertex_t i = 0; i < g.vertex_count(); ++i) {
    auto dist = bfs_distances(g, i, k);
    double miss = 1.0;
    for (vertex_t j = 0; j < g.vertex_count(); ++j)
      if (dist[j] != unreachable) miss *= 1.0 - p[j];
    total += p[i] + miss;
  }
  return total;
}

/// S1 draws vertex i with probability p_i; S2 collects the vertices left
/// undominated by S1. S1 ∪ S2 always k-dominates.
inline dominating_set random_round_construct(const graph& g, std::size_t k,
                                             std::span<const double> p, std::uint64_t seed) {
  check_probabilities(g, p);
  const std::size_t n = g.vertex_count();
  rng r(seed);
  vertex_set drawn(n);
  for (vertex_t i = 0; i < n; ++i)
    if (unit_double(r) < p[i]) drawn.insert(i);
  vertex_set reached = k_reach(g, drawn, k);
  vertex_set result = drawn;
  for (vertex_t i = 0; i < n; ++i)
    if (!reached.contains(i)) result.insert(i);
  return {std::move(result), k, construction_method::randomized};
}

struct trial_stats {
  std::size_t trials = 0;
  double mean_size = 0.0;
  double stddev = 0.0;  // sample standard deviation (n - 1)
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  std::uint64_t seed = 0;
  bool all_valid = true;
};

/// Worker count from DISTDOM_THREADS, else hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("DISTDOM_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs seeds seed, seed+1, ..., seed+trials-1. Aggregation is in seed
/// order, so the result does not depend on the worker count.
inline trial_stats trial_mean(const graph& g, std::size_t k, std::span<const double> p,
                              std::size_t trials, std::uint64_t seed,
                              std::size_t workers = worker_count()) {
  if (trials == 0) throw precondition_error("trials must be >= 1");
  check_probabilities(g, p);
  std::vector<std::size_t> sizes(trials, 0);
  std::vector<char> valid(trials, 0);
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      auto s = random_round_construct(g, k, p, seed + t);
      sizes[t] = s.size();
      valid[t] = is_k_dominating(g, s.members, k) ? 1 : 0;
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, trials);
  if (workers == 1) {
    run_range(0, trials);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (trials + workers - 1) / workers;
    for (std::size_t begin = 0; begin < trials; begin += chunk)
      pool.emplace_back(run_range, begin, std::min(trials, begin + chunk));
  }

  trial_stats st;
  st.trials = trials;
  st.seed = seed;
  st.min_size = *std::min_element(sizes.begin(), sizes.end());
  st.max_size = *std::max_element(sizes.begin(), sizes.end());
  double sum = 0.0;
  for (auto s : sizes) sum += static_cast<double>(s);
  st.mean_size = sum / static_cast<double>(trials);
  double sq = 0.0;
  for (auto s : sizes) sq += (static_cast<double>(s) - st.mean_size) * (static_cast<double>(s) - st.mean_size);
  st.stddev = trials > 1 ? std::sqrt(sq / static_cast<double>(trials - 1)) : 0.0;
  st.all_valid = std::all_of(valid.begin(), valid.end(), [](char c) { return c != 0; });
  return st;
}

}  // namespace distdom
