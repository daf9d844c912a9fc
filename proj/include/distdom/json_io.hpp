#pragma once

// JSON serialization for the report types (nlohmann/json). Non-finite
// doubles come out as null.

#include <cmath>
#include <string>

#include "json.hpp"

#include "distdom/bounds.hpp"
#include "distdom/domination.hpp"
#include "distdom/gen.hpp"
#include "distdom/profile.hpp"
#include "distdom/random.hpp"
#include "distdom/report.hpp"
#include "distdom/verify.hpp"

namespace distdom {

using json = nlohmann::json;

namespace detail {
inline json real(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }
}  // namespace detail

inline void to_json(json& j, const vertex_set& s) { j = s.members(); }

inline void to_json(json& j, const dominating_set& d) {
  j = json{{"k", d.k}, {"method", to_string(d.method)}, {"size", d.size()}, {"members", d.members}};
}

inline void to_json(json& j, const trial_stats& t) {
  j = json{{"trials", t.trials},       {"mean_size", t.mean_size}, {"stddev", t.stddev},
           {"min_size", t.min_size},   {"max_size", t.max_size},   {"seed", t.seed},
           {"all_valid", t.all_valid}, {"rng", std::string(rng_name)}};
}

inline void to_json(json& j, const bipartite_profile& p) {
  j = json{{"n1", p.n1}, {"n2", p.n2}, {"delta1", p.delta1}, {"delta2", p.delta2}, {"k", p.k}};
}

inline void to_json(json& j, const bound_coefficients& c) {
  j = json{{"flavor", to_string(c.flavor)}, {"a11", c.a11}, {"a12", c.a12},
           {"a21", c.a21},                  {"a22", c.a22}, {"m_ceil", c.m_ceil}};
}

inline void to_json(json& j, const tian_xu_point& t) {
  j = json{{"p1", detail::real(t.p1)},
           {"p2", detail::real(t.p2)},
           {"u", detail::real(t.u)},
           {"v", detail::real(t.v)},
           {"valid", t.valid}};
}

inline void to_json(json& j, const stationary_point& s) {
  j = json{{"e1", detail::real(s.e1)},
           {"e2", detail::real(s.e2)},
           {"p1_star", detail::real(s.p1_star)},
           {"p2_star", detail::real(s.p2_star)},
           {"determinant", s.determinant},
           {"feasible", s.feasible},
           {"four_perfect", s.four_perfect()}};
}

inline void to_json(json& j, const point2& p) { j = json::array({detail::real(p.p1), detail::real(p.p2)}); }

inline void to_json(json& j, const even_k_minimum& e) {
  j = json{{"case", to_string(e.tag)},
           {"value", detail::real(e.value)},
           {"ratio_12", e.ratio_12},
           {"ratio_21", e.ratio_21},
           {"T", e.t}};
  if (e.tag != even_case::none) {
    j["argmin"] = e.argmin;
    if (e.argmin_end) j["argmin_end"] = *e.argmin_end;
  }
}

inline void to_json(json& j, const minimum_2d& m) {
  j = json{{"p1", m.p1}, {"p2", m.p2}, {"value", m.value}, {"sweeps", m.sweeps}};
}

inline void to_json(json& j, const labeling_bounds& lb) {
  j = json{{"profile", lb.profile},
           {"coefficients_new", lb.improved},
           {"coefficients_old", lb.classical},
           {"perfect", lb.perfect},
           {"closing_bound", lb.closing_bound},
           {"new_numeric", lb.new_numeric},
           {"old_numeric", lb.old_numeric},
           {"new_min", lb.new_min},
           {"new_method", lb.new_method},
           {"old_min", lb.old_min},
           {"old_method", lb.old_method}};
  j["four_perfect"] = lb.four_perfect ? json(*lb.four_perfect) : json(nullptr);
  j["stationary"] = lb.stationary ? json(*lb.stationary) : json(nullptr);
  j["even_k"] = lb.even ? json(*lb.even) : json(nullptr);
  j["classical_point"] = lb.classical_point ? json(*lb.classical_point) : json(nullptr);
  if (lb.h_old_at_clamped_point) {
    j["h_old_at_clamped_point"] = *lb.h_old_at_clamped_point;
    j["clamped_point_note"] = "classical point outside (0,1)^2; clamped evaluation, not a certified bound";
  }
}

inline void to_json(json& j, const bound_report& r) {
  j = json{{"profile", r.profile},
           {"canonical", r.canonical},
           {"swapped", r.swapped},
           {"new_min", r.new_min},
           {"new_method", r.new_method},
           {"old_min", r.old_min},
           {"old_method", r.old_method},
           {"perfect", r.perfect},
           {"four_perfect", r.four_perfect},
           {"radius", r.radius},
           {"hypothesis_holds", r.hypothesis_holds}};
  j["exact_gamma"] = r.exact_gamma ? json(*r.exact_gamma) : json(nullptr);
  j["exact_witness"] = r.exact_witness ? json(*r.exact_witness) : json(nullptr);
}

inline void to_json(json& j, const check_failure& f) {
  j = json{{"check", f.check}, {"params", f.params}};
  if (!f.graph.empty()) j["graph"] = f.graph;
}

inline void to_json(json& j, const table_discrepancy& d) {
  j = json{{"table", d.table}, {"q", d.q}, {"row", d.row}, {"printed", d.printed}, {"computed", d.computed}};
}

inline void to_json(json& j, const verification_report& r) {
  j = json{{"name", r.name},
           {"checks_run", r.checks_run},
           {"skipped", r.skipped},
           {"failures", r.failures},
           {"discrepancies", r.discrepancies},
           {"counters", r.counters},
           {"notes", r.notes},
           {"passed", r.passed()}};
}

inline void to_json(json& j, const gen_spec& s) {
  j = json{{"family", to_string(s.family)}, {"params", s.params}, {"seed", s.seed}};
  if (s.family == graph_family::random_bipartite) j["extra"] = s.extra;
}

inline void from_json(const json& j, gen_spec& s) {
  const auto family = j.at("family").get<std::string>();
  std::string text = family + ":";
  const auto params = j.at("params").get<std::vector<std::int64_t>>();
  for (std::size_t i = 0; i < params.size(); ++i) text += (i ? "," : "") + std::to_string(params[i]);
  if (j.contains("extra")) text += "," + std::to_string(j.at("extra").get<double>());
  s = parse_gen_spec(text, j.value("seed", std::uint64_t{0}));
  if (j.contains("extra")) s.extra = j.at("extra").get<double>();
}

}  // namespace distdom
