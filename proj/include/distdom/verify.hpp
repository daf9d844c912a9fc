#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "distdom/bounds.hpp"
#include "distdom/domination.hpp"
#include "distdom/gen.hpp"
#include "distdom/graph.hpp"
#include "distdom/profile.hpp"

namespace distdom {

/// A failed check with enough context to rerun it: either a profile tuple
/// in `params` or a graph in edge-list form.
struct check_failure {
  std::string check;
  std::string params;
  std::string graph;  // edge list, empty for profile-only checks
};

/// Printed table entry that differs from recomputation. Kept apart from
/// failures: it flags the table, not the inequality.
struct table_discrepancy {
  std::string table;
  int q = 0;
  std::string row;  // "lhs" or "rhs"
  std::int64_t printed = 0;
  std::int64_t computed = 0;
};

struct verification_report {
  std::string name;
  std::size_t checks_run = 0;
  std::size_t skipped = 0;
  std::vector<check_failure> failures;
  std::vector<table_discrepancy> discrepancies;
  std::map<std::string, std::size_t> counters;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }

  void fail(std::string check, std::string params, std::string graph_text = {}) {
    failures.push_back({std::move(check), std::move(params), std::move(graph_text)});
  }

  void merge(const verification_report& other) {
    checks_run += other.checks_run;
    skipped += other.skipped;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    discrepancies.insert(discrepancies.end(), other.discrepancies.begin(), other.discrepancies.end());
    for (const auto& [key, value] : other.counters) counters[key] += value;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

/// For every vertex with N_k[v] != V, compares the part counts of N_k(v)
/// with both the improved and the classical lower bounds. Vertices that
/// see the whole graph are counted in `skipped`.
inline verification_report check_lemma_vertexwise(const graph& g, const bipartition& b,
                                                  std::size_t k) {
  if (!is_valid_bipartition(g, b)) throw not_bipartite_error(0);
  verification_report rep;
  rep.name = "lemma_vertexwise";
  const auto prof = profile(g, b, static_cast<std::int64_t>(k));
  const auto improved = coeff_new(prof);
  const auto classical = coeff_old(prof);
  for (vertex_t v = 0; v < g.vertex_count(); ++v) {
    const auto split = k_neighborhood_split(g, b, v, k);
    if (split.closed_is_all) {
      ++rep.skipped;
      continue;
    }
    const bool in_v1 = b.in_v1(v);
    auto check = [&](const char* name, std::size_t count, std::int64_t bound) {
      ++rep.checks_run;
      if (static_cast<std::int64_t>(count) < bound) {
        std::ostringstream params;
        params << "vertex=" << v << " side=" << (in_v1 ? 1 : 2) << " k=" << k << " count=" << count
               << " bound=" << bound << " profile=" << prof.to_string();
        rep.fail(name, params.str(), to_edge_list(g));
      }
    };
    for (const auto* c : {&improved, &classical}) {
      const std::string tag = std::string(to_string(c->flavor));
      if (in_v1) {
        check((tag + ":same_side_v1").c_str(), split.in_v1, c->a11);
        check((tag + ":cross_side_v1").c_str(), split.in_v2, c->a12);
      } else {
        check((tag + ":cross_side_v2").c_str(), split.in_v1, c->a21);
        check((tag + ":same_side_v2").c_str(), split.in_v2, c->a22);
      }
    }
  }
  rep.counters["vertices_skipped"] = rep.skipped;
  return rep;
}

inline verification_report check_lemma_vertexwise(const graph& g, std::size_t k) {
  return check_lemma_vertexwise(g, two_color(g), k);
}

/// The two residue tables for k = 12p + q, q = 1..12. `lhs` is the
/// coefficient of delta, `rhs` the constant it must dominate.
struct residue_table {
  const char* name;
  std::array<std::int64_t, 12> lhs;
  std::array<std::int64_t, 12> rhs;
};

inline constexpr residue_table printed_table_1{
    "table1", {0, 1, 1, 1, 1, 2, 1, 1, 1, 2, 2, 2}, {0, 1, 1, 0, 0, 1, 2, 1, 1, 2, 2, 1}};
inline constexpr residue_table printed_table_2{
    "table2", {0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1}, {0, 0, -1, -1, 0, 0, 0, 0, 1, 1, 0, 0}};

/// (ceil((q-1)/4) - ceil(q/6) + 1,  ceil(q/6) - 1 - 2 floor(q/4) + floor(q/2))
constexpr std::array<std::int64_t, 2> table_1_entry(std::int64_t q) {
  return {ceil_div(q - 1, 4) - ceil_div(q, 6) + 1,
          ceil_div(q, 6) - 1 - 2 * floor_div(q, 4) + floor_div(q, 2)};
}

/// (ceil(q/4) - ceil(q/6),  ceil(q/6) - 1 - floor((q-1)/2) + 2 floor((q-1)/4))
constexpr std::array<std::int64_t, 2> table_2_entry(std::int64_t q) {
  return {ceil_div(q, 4) - ceil_div(q, 6),
          ceil_div(q, 6) - 1 - floor_div(q - 1, 2) + 2 * floor_div(q - 1, 4)};
}

inline verification_report check_tables(std::int64_t delta_max) {
  if (delta_max < 2) throw precondition_error("delta_max must be >= 2");
  verification_report rep;
  rep.name = "tables";
  std::size_t cells = 0;
  for (int table = 1; table <= 2; ++table) {
    const auto& printed = table == 1 ? printed_table_1 : printed_table_2;
    for (int q = 1; q <= 12; ++q) {
      const auto entry = table == 1 ? table_1_entry(q) : table_2_entry(q);
      ++cells;
      ++rep.checks_run;
      if (entry[0] != printed.lhs[q - 1])
        rep.discrepancies.push_back({printed.name, q, "lhs", printed.lhs[q - 1], entry[0]});
      if (entry[1] != printed.rhs[q - 1])
        rep.discrepancies.push_back({printed.name, q, "rhs", printed.rhs[q - 1], entry[1]});
      for (std::int64_t delta = 2; delta <= delta_max; ++delta) {
        ++rep.checks_run;
        if (entry[0] * delta < entry[1])
          rep.fail(std::string(printed.name) + ":lhs>=rhs",
                   "q=" + std::to_string(q) + " delta=" + std::to_string(delta));
      }
    }
  }
  rep.counters["table_cells"] = cells;
  rep.counters["table_discrepancies"] = rep.discrepancies.size();
  return rep;
}

/// Sweeps delta1, delta2 in 1..delta_range and k in 1..k_range with
/// n1 = n2 = 50: improved coefficients dominate the classical ones, the
/// even-k identities hold, and h* <= h on a 33x33 grid.
inline verification_report check_improvement(std::int64_t delta_range, std::int64_t k_range) {
  if (delta_range < 1 || k_range < 1) throw precondition_error("ranges must be >= 1");
  verification_report rep;
  rep.name = "improvement";
  constexpr int grid = 32;
  for (std::int64_t d1 = 1; d1 <= delta_range; ++d1) {
    for (std::int64_t d2 = 1; d2 <= delta_range; ++d2) {
      for (std::int64_t k = 1; k <= k_range; ++k) {
        const bipartite_profile p{50, 50, d1, d2, k};
        const auto a = coeff_new(p).as_array();
        const auto c = coeff_old(p);
        const auto b = c.as_array();
        static constexpr const char* names[] = {"a11", "a12", "a21", "a22"};
        for (int i = 0; i < 4; ++i) {
          ++rep.checks_run;
          if (a[i] < b[i])
            rep.fail(std::string("dominance:") + names[i],
                     p.to_string() + " new=" + std::to_string(a[i]) + " old=" + std::to_string(b[i]));
        }
        if (k % 2 == 0 && d1 >= 2 && d2 >= 2) {
          rep.checks_run += 2;
          if (a[0] + 1 != a[2]) rep.fail("even_k:a11+1=a21", p.to_string());
          if (a[3] + 1 != a[1]) rep.fail("even_k:a22+1=a12", p.to_string());
        }
        const auto fresh = new_surface(p);
        const auto stale = old_surface(p);
        for (int i = 0; i <= grid; ++i) {
          for (int j = 0; j <= grid; ++j) {
            const double p1 = static_cast<double>(i) / grid;
            const double p2 = static_cast<double>(j) / grid;
            ++rep.checks_run;
            if (fresh(p1, p2) > stale(p1, p2) + 1e-12)
              rep.fail("pointwise:h*<=h",
                       p.to_string() + " p1=" + std::to_string(p1) + " p2=" + std::to_string(p2));
          }
        }
      }
    }
  }
  return rep;
}

/// gamma_k <= floor(min h*) and <= floor(min h) when no vertex k-dominates
/// alone. Otherwise gamma_k = 1 is recorded and the check is skipped.
inline verification_report check_bound_vs_exact(const graph& g, std::size_t k,
                                                std::uint64_t budget = default_node_budget) {
  verification_report rep;
  rep.name = "bound_vs_exact";
  require_connected(g);
  const auto b = two_color(g);
  if (radius(g) <= k) {
    ++rep.skipped;
    rep.notes.push_back("k=" + std::to_string(k) + ": gamma_k = 1 (radius <= k), skipped");
    return rep;
  }
  const auto prof = profile(g, b, static_cast<std::int64_t>(k));
  const auto gamma = gamma_k_exact(g, k, budget).gamma;
  const double fresh = std::min(numeric_min_h_star(prof).value, numeric_min_h_star(prof.swapped()).value);
  const double stale = std::min(numeric_min_h_old(prof).value, numeric_min_h_old(prof.swapped()).value);
  const auto context = [&] {
    return "k=" + std::to_string(k) + " gamma=" + std::to_string(gamma) +
           " new=" + std::to_string(fresh) + " old=" + std::to_string(stale) +
           " profile=" + prof.to_string();
  };
  rep.checks_run += 3;
  if (static_cast<double>(gamma) > std::floor(fresh)) rep.fail("gamma<=floor(new)", context(), to_edge_list(g));
  if (static_cast<double>(gamma) > std::floor(stale)) rep.fail("gamma<=floor(old)", context(), to_edge_list(g));
  if (fresh > stale + 1e-9) rep.fail("new<=old", context(), to_edge_list(g));
  rep.notes.push_back(context());
  return rep;
}

/// gamma_k(G) = gamma_1(G^k); graphs small enough for subset enumeration
/// are also checked against it.
inline verification_report check_power_equivalence(const graph& g, std::size_t k,
                                                   std::uint64_t budget = default_node_budget) {
  verification_report rep;
  rep.name = "power_equivalence";
  const auto direct = gamma_k_exact(g, k, budget).gamma;
  const auto powered = gamma_k_exact(power_graph(g, k), 1, budget).gamma;
  ++rep.checks_run;
  const std::string ctx = "k=" + std::to_string(k) + " gamma_k(G)=" + std::to_string(direct) +
                          " gamma(G^k)=" + std::to_string(powered);
  if (direct != powered) rep.fail("gamma_k(G)=gamma(G^k)", ctx, to_edge_list(g));
  if (g.vertex_count() <= exhaustive_limit) {
    ++rep.checks_run;
    const auto brute = min_dominating_exhaustive(g, k).size();
    if (brute != direct)
      rep.fail("branch_and_bound=enumeration", ctx + " enumeration=" + std::to_string(brute),
               to_edge_list(g));
  }
  return rep;
}

/// Seeded random connected bipartite graphs with 2 <= n_j <= max_n / 2 and
/// degree demands 1..max_delta.
inline std::vector<gen_spec> random_corpus(std::size_t count, std::int64_t max_n,
                                           std::int64_t max_delta, std::uint64_t seed) {
  rng r(seed);
  const std::int64_t half = std::max<std::int64_t>(2, max_n / 2);
  std::vector<gen_spec> out;
  static constexpr double extras[] = {0.0, 0.0, 0.02, 0.05};
  for (std::size_t i = 0; i < count; ++i) {
    gen_spec s;
    s.family = graph_family::random_bipartite;
    const auto n1 = 2 + static_cast<std::int64_t>(uniform_below(r, static_cast<std::uint64_t>(half - 1)));
    const auto n2 = 2 + static_cast<std::int64_t>(uniform_below(r, static_cast<std::uint64_t>(half - 1)));
    const auto d1 = 1 + static_cast<std::int64_t>(uniform_below(r, static_cast<std::uint64_t>(std::min(max_delta, n2))));
    const auto d2 = 1 + static_cast<std::int64_t>(uniform_below(r, static_cast<std::uint64_t>(std::min(max_delta, n1))));
    s.params = {n1, n2, d1, d2};
    s.extra = extras[uniform_below(r, 4)];
    s.seed = r();
    out.push_back(s);
  }
  return out;
}

/// check_lemma_vertexwise for every k = 1..diameter-1 on each corpus graph.
inline verification_report lemma_sweep(const std::vector<gen_spec>& corpus) {
  verification_report rep;
  rep.name = "lemma_sweep";
  for (const auto& spec : corpus) {
    const auto g = generate(spec);
    const auto b = two_color(g);
    const auto diam = diameter(g);
    for (std::size_t k = 1; k < diam; ++k) rep.merge(check_lemma_vertexwise(g, b, k));
  }
  rep.name = "lemma_sweep";
  rep.counters["graphs"] = corpus.size();
  return rep;
}

}  // namespace distdom
