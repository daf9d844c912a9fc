#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "distdom/bounds.hpp"
#include "distdom/domination.hpp"
#include "distdom/graph.hpp"
#include "distdom/profile.hpp"

namespace distdom {

/// Everything computed for one labeling of the two parts.
struct labeling_bounds {
  bipartite_profile profile;
  bound_coefficients improved;
  bound_coefficients classical;
  bool perfect = false;
  std::optional<bool> four_perfect;           // odd k with a nonsingular system
  std::optional<stationary_point> stationary;  // odd k
  std::optional<even_k_minimum> even;          // even k, delta1, delta2 >= 2
  std::optional<tian_xu_point> classical_point;
  // h_old at the classical point with p1, p2 clamped into [0,1]; only set
  // when that point is invalid but u, v > 0.
  std::optional<double> h_old_at_clamped_point;
  double closing_bound = 0.0;
  minimum_2d new_numeric;
  minimum_2d old_numeric;
  double new_min = 0.0;
  std::string new_method;  // even_k_case_i/ii/iii, odd_k_corollary, numeric
  double old_min = 0.0;
  std::string old_method;  // classical_point, numeric
};

struct bound_report {
  bipartite_profile profile;  // canonical labeling
  labeling_bounds canonical;
  labeling_bounds swapped;
  double new_min = 0.0;
  double old_min = 0.0;
  std::string new_method;
  std::string old_method;
  bool perfect = false;
  bool four_perfect = false;
  std::size_t radius = 0;
  bool hypothesis_holds = false;  // radius > k: N_k[v] != V for every v
  std::optional<std::size_t> exact_gamma;
  std::optional<dominating_set> exact_witness;
};

inline labeling_bounds evaluate_labeling(const bipartite_profile& p, double tol = 1e-13) {
  labeling_bounds lb;
  lb.profile = p;
  lb.improved = coeff_new(p);
  lb.classical = coeff_old(p);
  lb.perfect = is_perfect(p);
  lb.closing_bound = tian_xu_closing_bound(p);
  lb.new_numeric = numeric_min_h_star(p, tol);
  lb.old_numeric = numeric_min_h_old(p, tol);

  lb.new_min = lb.new_numeric.value;
  lb.new_method = "numeric";
  if (p.k % 2 == 0) {
    if (p.delta1 >= 2 && p.delta2 >= 2) {
      lb.even = even_k_min(p);
      if (lb.even->tag != even_case::none) {
        lb.new_min = lb.even->value;
        lb.new_method = "even_k_case_" + std::string(to_string(lb.even->tag));
      }
    }
  } else if (lb.improved.determinant() != 0) {
    lb.stationary = odd_k_stationary(p);
    lb.four_perfect = lb.stationary->four_perfect();
    if (lb.stationary->feasible) {
      lb.new_min = corollary_min(p);
      lb.new_method = "odd_k_corollary";
    }
  }

  lb.old_min = lb.old_numeric.value;
  lb.old_method = "numeric";
  if (p.delta1 * p.delta2 > 1) {
    lb.classical_point = tian_xu(p);
    const auto& t = *lb.classical_point;
    if (t.valid) {
      lb.old_min = h_old(p, t.p1, t.p2);
      lb.old_method = "classical_point";
    } else if (t.u > 0.0 && t.v > 0.0) {
      lb.h_old_at_clamped_point = h_old(p, std::clamp(t.p1, 0.0, 1.0), std::clamp(t.p2, 0.0, 1.0));
    }
  }
  return lb;
}

/// Bounds for both labelings of a connected bipartite graph, keeping the
/// smaller minimum per flavor. exact_budget = 0 skips the exact solver.
inline bound_report make_bound_report(const graph& g, std::size_t k, std::uint64_t exact_budget,
                                      double tol = 1e-13) {
  require_connected(g);
  const auto b = two_color(g);
  bound_report r;
  r.profile = profile(g, b, static_cast<std::int64_t>(k));
  r.canonical = evaluate_labeling(r.profile, tol);
  r.swapped = evaluate_labeling(r.profile.swapped(), tol);

  const auto& best_new = r.swapped.new_min < r.canonical.new_min ? r.swapped : r.canonical;
  const auto& best_old = r.swapped.old_min < r.canonical.old_min ? r.swapped : r.canonical;
  r.new_min = best_new.new_min;
  r.new_method = best_new.new_method;
  r.old_min = best_old.old_min;
  r.old_method = best_old.old_method;
  r.perfect = r.canonical.perfect || r.swapped.perfect;
  r.four_perfect = r.canonical.four_perfect.value_or(false) || r.swapped.four_perfect.value_or(false);
  r.radius = radius(g);
  r.hypothesis_holds = r.radius > k;

  if (exact_budget > 0) {
    auto ex = gamma_k_exact(g, k, exact_budget);
    r.exact_gamma = ex.gamma;
    r.exact_witness = std::move(ex.witness);
  }
  return r;
}

}  // namespace distdom
