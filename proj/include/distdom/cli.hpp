#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "distdom/bounds.hpp"
#include "distdom/domination.hpp"
#include "distdom/gen.hpp"
#include "distdom/graph.hpp"
#include "distdom/json_io.hpp"
#include "distdom/report.hpp"
#include "distdom/verify.hpp"

namespace distdom::cli {

enum exit_code : int { ok = 0, verification_failed = 1, usage_error = 2, budget_exhausted = 3 };

struct run_config {
  std::string command;
  std::string input_path;
  std::string gen;
  std::string profile;  // "n1,n2,delta1,delta2"; bounds only
  std::optional<std::size_t> k;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::uint64_t budget = default_node_budget;
  double tol = 1e-13;
  std::string format = "json";
  std::optional<double> probability;
  bool no_exact = false;
  std::int64_t delta_max = 1000;
};

namespace detail {

inline graph load_graph(const run_config& cfg) {
  if (!cfg.input_path.empty()) {
    std::ifstream in(cfg.input_path);
    if (!in) throw precondition_error("cannot open '" + cfg.input_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
  }
  return generate(parse_gen_spec(cfg.gen, cfg.seed));
}

inline json graph_source(const run_config& cfg) {
  if (!cfg.input_path.empty()) return json{{"input", cfg.input_path}};
  return json{{"gen", parse_gen_spec(cfg.gen, cfg.seed)}};
}

inline std::size_t require_k(const run_config& cfg) {
  if (!cfg.k || *cfg.k == 0) throw precondition_error("--k INT (>= 1) is required");
  return *cfg.k;
}

inline bipartite_profile parse_profile(const std::string& text, std::int64_t k) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(field, &used));
      if (used != field.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw precondition_error("bad --profile field '" + field + "'");
    }
  }
  if (v.size() != 4) throw precondition_error("--profile takes n1,n2,delta1,delta2");
  bipartite_profile p{v[0], v[1], v[2], v[3], k};
  p.validate();
  return p;
}

inline void emit(std::ostream& out, const json& doc, const std::string& format) {
  if (format == "text")
    out << doc.dump(2) << '\n';
  else
    out << doc.dump() << '\n';
}

inline int finish_verification(std::ostream& out, const run_config& cfg, json doc, bool passed) {
  doc["passed"] = passed;
  emit(out, doc, cfg.format);
  return passed ? ok : verification_failed;
}

inline int cmd_bounds(const run_config& cfg, std::ostream& out) {
  const auto k = require_k(cfg);
  if (!cfg.profile.empty()) {
    const auto p = parse_profile(cfg.profile, static_cast<std::int64_t>(k));
    const auto canonical = evaluate_labeling(p, cfg.tol);
    const auto swapped = evaluate_labeling(p.swapped(), cfg.tol);
    const auto& best_new = swapped.new_min < canonical.new_min ? swapped : canonical;
    const auto& best_old = swapped.old_min < canonical.old_min ? swapped : canonical;
    json doc{{"command", "bounds"},    {"profile", p},
             {"canonical", canonical}, {"swapped", swapped},
             {"new_min", best_new.new_min}, {"new_method", best_new.new_method},
             {"old_min", best_old.old_min}, {"old_method", best_old.old_method}};
    emit(out, doc, cfg.format);
    return ok;
  }
  const auto g = load_graph(cfg);
  const auto report = make_bound_report(g, k, cfg.no_exact ? 0 : cfg.budget, cfg.tol);
  if (cfg.format == "text") {
    out << "profile " << report.profile.to_string() << '\n'
        << std::setprecision(10) << "new_min " << report.new_min << " (" << report.new_method << ")\n"
        << "old_min " << report.old_min << " (" << report.old_method << ")\n"
        << "closing_bound " << report.canonical.closing_bound << '\n'
        << "perfect " << report.perfect << " four_perfect " << report.four_perfect << '\n';
    if (report.exact_gamma) out << "gamma_k " << *report.exact_gamma << '\n';
    return ok;
  }
  json doc = report;
  doc["command"] = "bounds";
  doc["source"] = graph_source(cfg);
  emit(out, doc, cfg.format);
  return ok;
}

inline int cmd_exact(const run_config& cfg, std::ostream& out) {
  const auto k = require_k(cfg);
  const auto g = load_graph(cfg);
  const auto res = gamma_k_exact(g, k, cfg.budget);
  if (cfg.format == "text") {
    out << "gamma_" << k << " = " << res.gamma << '\n' << "witness";
    for (auto v : res.witness.members.members()) out << ' ' << v;
    out << '\n';
    return ok;
  }
  json doc{{"command", "exact"}, {"source", graph_source(cfg)}, {"k", k},
           {"gamma", res.gamma}, {"witness", res.witness},      {"nodes", res.nodes},
           {"exhaustive_fallback", res.exhaustive_fallback}};
  emit(out, doc, cfg.format);
  return ok;
}

inline int cmd_construct(const run_config& cfg, std::ostream& out) {
  const auto k = require_k(cfg);
  const auto g = load_graph(cfg);
  std::vector<double> p(g.vertex_count(), 0.0);
  json prob;
  if (cfg.probability) {
    std::fill(p.begin(), p.end(), *cfg.probability);
    prob = json{{"uniform", *cfg.probability}};
  } else {
    // Per-part probabilities at the minimizer of the improved surface.
    const auto b = two_color(g);
    const auto prof = profile(g, b, static_cast<std::int64_t>(k));
    const auto m = numeric_min_h_star(prof, cfg.tol);
    for (vertex_t v = 0; v < g.vertex_count(); ++v) p[v] = b.in_v1(v) ? m.p1 : m.p2;
    prob = json{{"p1", m.p1}, {"p2", m.p2}, {"from", "numeric_min_h_star"}};
  }
  const auto one = random_round_construct(g, k, p, cfg.seed);
  const auto stats = trial_mean(g, k, p, cfg.trials, cfg.seed);
  const auto greedy = greedy_construct(g, k);
  json doc{{"command", "construct"},
           {"source", graph_source(cfg)},
           {"k", k},
           {"probabilities", prob},
           {"expected_size", expected_size(g, k, p)},
           {"set", one},
           {"set_is_dominating", is_k_dominating(g, one.members, k)},
           {"trials", stats},
           {"greedy", greedy}};
  emit(out, doc, cfg.format);
  return stats.all_valid ? ok : verification_failed;
}

inline int cmd_verify_lemma(const run_config& cfg, std::ostream& out) {
  const auto g = load_graph(cfg);
  const auto b = two_color(g);
  verification_report rep;
  rep.name = "lemma_vertexwise";
  if (cfg.k) {
    rep.merge(check_lemma_vertexwise(g, b, *cfg.k));
  } else {
    const auto diam = diameter(g);
    for (std::size_t k = 1; k < diam; ++k) rep.merge(check_lemma_vertexwise(g, b, k));
  }
  return finish_verification(out, cfg, json{{"command", "verify-lemma"}, {"source", graph_source(cfg)}, {"report", rep}},
                             rep.passed());
}

inline int cmd_verify_tables(const run_config& cfg, std::ostream& out) {
  const auto rep = check_tables(cfg.delta_max);
  return finish_verification(out, cfg, json{{"command", "verify-tables"}, {"report", rep}},
                             rep.passed());
}

inline int cmd_verify_all(const run_config& cfg, std::ostream& out) {
  std::vector<verification_report> reports;
  reports.push_back(check_tables(cfg.delta_max));
  reports.push_back(check_improvement(10, 100));
  reports.push_back(lemma_sweep(random_corpus(20, 40, 4, cfg.seed)));
  json doc{{"command", "verify-all"}};
  if (!cfg.input_path.empty() || !cfg.gen.empty()) {
    const auto g = load_graph(cfg);
    doc["source"] = graph_source(cfg);
    const auto b = two_color(g);
    const auto diam = diameter(g);
    verification_report lemma, exact, power;
    lemma.name = "lemma_vertexwise";
    exact.name = "bound_vs_exact";
    power.name = "power_equivalence";
    std::vector<std::size_t> ks;
    if (cfg.k)
      ks.push_back(*cfg.k);
    else
      for (std::size_t k = 1; k <= diam; ++k) ks.push_back(k);
    for (auto k : ks) {
      lemma.merge(check_lemma_vertexwise(g, b, k));
      exact.merge(check_bound_vs_exact(g, k, cfg.budget));
      power.merge(check_power_equivalence(g, k, cfg.budget));
    }
    reports.push_back(lemma);
    reports.push_back(exact);
    reports.push_back(power);
  }
  bool passed = true;
  // Table discrepancies are reported inside the documents but do not fail the run.
  for (const auto& r : reports) passed = passed && r.passed();
  doc["reports"] = reports;
  return finish_verification(out, cfg, doc, passed);
}

inline int cmd_gen(const run_config& cfg, std::ostream& out) {
  if (cfg.gen.empty()) throw precondition_error("gen needs --gen FAMILY:ARGS");
  const auto spec = parse_gen_spec(cfg.gen, cfg.seed);
  const auto g = generate(spec);
  if (cfg.format == "text") {
    out << to_edge_list(g);
    return ok;
  }
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json doc{{"command", "gen"}, {"spec", spec}, {"vertex_count", g.vertex_count()},
           {"edge_count", g.edge_count()}, {"edges", edges}};
  emit(out, doc, cfg.format);
  return ok;
}

/// One row per k = 1..diameter.
inline int cmd_sweep(const run_config& cfg, std::ostream& out) {
  const auto g = load_graph(cfg);
  require_connected(g);
  const auto diam = diameter(g);
  const bool as_json = cfg.format == "json";
  json rows = json::array();
  if (!as_json)
    out << "k,radius_le_k,gamma_k,new_min,new_method,old_min,old_method,closing_bound,perfect,four_perfect\n";
  for (std::size_t k = 1; k <= std::max<std::size_t>(diam, 1); ++k) {
    const auto r = make_bound_report(g, k, cfg.no_exact ? 0 : cfg.budget, cfg.tol);
    if (as_json) {
      rows.push_back({{"k", k},
                      {"radius_le_k", !r.hypothesis_holds},
                      {"gamma_k", r.exact_gamma ? json(*r.exact_gamma) : json(nullptr)},
                      {"new_min", r.new_min},
                      {"new_method", r.new_method},
                      {"old_min", r.old_min},
                      {"old_method", r.old_method},
                      {"closing_bound", r.canonical.closing_bound},
                      {"perfect", r.perfect},
                      {"four_perfect", r.four_perfect}});
    } else {
      std::ostringstream line;
      line << std::setprecision(12) << k << ',' << (!r.hypothesis_holds) << ',';
      if (r.exact_gamma) line << *r.exact_gamma;
      line << ',' << r.new_min << ',' << r.new_method << ',' << r.old_min << ',' << r.old_method << ','
           << r.canonical.closing_bound << ',' << r.perfect << ',' << r.four_perfect;
      out << line.str() << '\n';
    }
  }
  if (as_json) emit(out, json{{"command", "sweep"}, {"source", graph_source(cfg)}, {"rows", rows}}, cfg.format);
  return ok;
}

}  // namespace detail

inline int execute(const run_config& cfg, std::ostream& out) {
  const bool needs_graph = cfg.command != "verify-tables" && cfg.command != "gen" &&
                           cfg.command != "verify-all" &&
                           !(cfg.command == "bounds" && !cfg.profile.empty());
  const int sources = static_cast<int>(!cfg.input_path.empty()) + static_cast<int>(!cfg.gen.empty()) +
                      static_cast<int>(!cfg.profile.empty());
  if (sources > 1) throw precondition_error("give exactly one of --input, --gen, --profile");
  if (needs_graph && sources == 0) throw precondition_error("an input graph is required (--input or --gen)");
  if (!cfg.profile.empty() && cfg.command != "bounds")
    throw precondition_error("--profile is only accepted by 'bounds'");

  if (cfg.command == "bounds") return detail::cmd_bounds(cfg, out);
  if (cfg.command == "exact") return detail::cmd_exact(cfg, out);
  if (cfg.command == "construct") return detail::cmd_construct(cfg, out);
  if (cfg.command == "verify-lemma") return detail::cmd_verify_lemma(cfg, out);
  if (cfg.command == "verify-tables") return detail::cmd_verify_tables(cfg, out);
  if (cfg.command == "verify-all") return detail::cmd_verify_all(cfg, out);
  if (cfg.command == "gen") return detail::cmd_gen(cfg, out);
  if (cfg.command == "sweep") return detail::cmd_sweep(cfg, out);
  throw precondition_error("unknown command '" + cfg.command + "'");
}

/// Parses argv, runs, and maps errors to exit codes.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-distance domination of bipartite graphs: exact values, constructions, bounds"};
  app.require_subcommand(1);
  run_config cfg;
  std::string format;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"bounds", "evaluate every upper bound for a graph or a profile"},
      {"exact", "exact gamma_k by branch and bound"},
      {"construct", "randomized and greedy k-dominating sets"},
      {"verify-lemma", "check per-vertex neighborhood bounds"},
      {"verify-tables", "recompute the residue tables"},
      {"verify-all", "run every verification"},
      {"gen", "generate a test graph"},
      {"sweep", "bounds and gamma_k for k = 1..diameter"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input", cfg.input_path, "edge-list file");
    sub->add_option("--gen", cfg.gen, "generator FAMILY:ARGS");
    sub->add_option("--k", cfg.k, "distance k");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--trials", cfg.trials, "randomized trials");
    sub->add_option("--budget", cfg.budget, "search node budget");
    sub->add_option("--tol", cfg.tol, "minimizer tolerance");
    sub->add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    if (name == "bounds") {
      sub->add_option("--profile", cfg.profile, "n1,n2,delta1,delta2 instead of a graph");
    }
    if (name == "bounds" || name == "sweep") sub->add_flag("--no-exact", cfg.no_exact, "skip the exact solver");
    if (name == "construct") sub->add_option("--p", cfg.probability, "uniform inclusion probability");
    if (name == "verify-tables" || name == "verify-all")
      sub->add_option("--delta-max", cfg.delta_max, "largest delta for table inequalities");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return usage_error;
  }
  cfg.format = format.empty() ? (cfg.command == "sweep" ? "csv" : "json") : format;

  try {
    return execute(cfg, out);
  } catch (const budget_exhausted_error& e) {
    err << "error: " << e.what() << '\n';
    return budget_exhausted;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

}  // namespace distdom::cli
