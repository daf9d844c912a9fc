#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "distdom/errors.hpp"
#include "distdom/profile.hpp"

namespace distdom {

// Integer floor/ceil division, exact for either sign of the numerator.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

enum class coeff_flavor { improved, classical };

inline std::string_view to_string(coeff_flavor f) {
  return f == coeff_flavor::improved ? "new" : "old";
}

/// Lower bounds on |N_k(v) ∩ V_j| for v in V_i. a_ij: vertex in part i,
/// count in part j. m_ceil = ceil(k / 6).
struct bound_coefficients {
  std::int64_t a11 = 0;
  std::int64_t a12 = 0;
  std::int64_t a21 = 0;
  std::int64_t a22 = 0;
  std::int64_t m_ceil = 0;
  coeff_flavor flavor = coeff_flavor::improved;

  std::array<std::int64_t, 4> as_array() const { return {a11, a12, a21, a22}; }

  /// (a11+1)(a22+1) - a12*a21
  std::int64_t determinant() const { return (a11 + 1) * (a22 + 1) - a12 * a21; }
};

/// Improved per-vertex neighborhood bounds.
inline bound_coefficients coeff_new(const bipartite_profile& p) {
  p.validate();
  const std::int64_t k = p.k;
  const std::int64_t w1 = std::max<std::int64_t>(2, p.delta1);
  const std::int64_t w2 = std::max<std::int64_t>(2, p.delta2);
  const std::int64_t same_side = 2 * floor_div(k, 4) - floor_div(k, 2);
  const std::int64_t cross_side = floor_div(k - 1, 2) - 2 * floor_div(k - 1, 4);
  bound_coefficients c;
  c.flavor = coeff_flavor::improved;
  c.m_ceil = ceil_div(k, 6);
  c.a11 = ceil_div(k - 1, 4) * w2 + same_side;
  c.a12 = p.delta1 + (ceil_div(k, 4) - 1) * w1 + cross_side;
  c.a21 = p.delta2 + (ceil_div(k, 4) - 1) * w2 + cross_side;
  c.a22 = ceil_div(k - 1, 4) * w1 + same_side;
  return c;
}

/// Classical bounds with M = ceil(k / 6).
inline bound_coefficients coeff_old(const bipartite_profile& p) {
  p.validate();
  const std::int64_t m = ceil_div(p.k, 6);
  bound_coefficients c;
  c.flavor = coeff_flavor::classical;
  c.m_ceil = m;
  c.a11 = (m - 1) * (p.delta2 + 1);
  c.a12 = m * (p.delta1 + 1) - 1;
  c.a21 = m * (p.delta2 + 1) - 1;
  c.a22 = (m - 1) * (p.delta1 + 1);
  return c;
}

/// f(p1, p2) = n1 p1 + n2 p2 + n1 exp(-(c11 p1 + c12 p2)) + n2 exp(-(c21 p1 + c22 p2)).
/// Convex on R^2; both bound surfaces have this shape.
struct exp_surface {
  double n1 = 0.0;
  double n2 = 0.0;
  double c11 = 0.0;
  double c12 = 0.0;
  double c21 = 0.0;
  double c22 = 0.0;

  static exp_surface from(const bipartite_profile& p, const bound_coefficients& c) {
    return {static_cast<double>(p.n1), static_cast<double>(p.n2),
            static_cast<double>(c.a11 + 1), static_cast<double>(c.a12),
            static_cast<double>(c.a21), static_cast<double>(c.a22 + 1)};
  }

  double first_exp(double p1, double p2) const { return std::exp(-(c11 * p1 + c12 * p2)); }
  double second_exp(double p1, double p2) const { return std::exp(-(c21 * p1 + c22 * p2)); }

  double operator()(double p1, double p2) const {
    return n1 * p1 + n2 * p2 + n1 * first_exp(p1, p2) + n2 * second_exp(p1, p2);
  }

  std::array<double, 2> gradient(double p1, double p2) const {
    const double x = first_exp(p1, p2);
    const double y = second_exp(p1, p2);
    return {n1 - n1 * c11 * x - n2 * c21 * y, n2 - n1 * c12 * x - n2 * c22 * y};
  }

  /// Row-major 2x2.
  std::array<double, 4> hessian(double p1, double p2) const {
    const double x = n1 * first_exp(p1, p2);
    const double y = n2 * second_exp(p1, p2);
    const double h11 = x * c11 * c11 + y * c21 * c21;
    const double h12 = x * c11 * c12 + y * c21 * c22;
    const double h22 = x * c12 * c12 + y * c22 * c22;
    return {h11, h12, h12, h22};
  }
};

namespace detail {

inline void check_unit(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw precondition_error(std::string(name) + " must lie in [0, 1]");
}

}  // namespace detail

inline exp_surface new_surface(const bipartite_profile& p) {
  return exp_surface::from(p, coeff_new(p));
}
inline exp_surface old_surface(const bipartite_profile& p) {
  return exp_surface::from(p, coeff_old(p));
}

inline double h_star(const bipartite_profile& p, double p1, double p2) {
  detail::check_unit(p1, "p1");
  detail::check_unit(p2, "p2");
  return new_surface(p)(p1, p2);
}

/// Same shape as h_star with the classical coefficients.
inline double h_old(const bipartite_profile& p, double p1, double p2) {
  detail::check_unit(p1, "p1");
  detail::check_unit(p2, "p2");
  return old_surface(p)(p1, p2);
}

/// delta1*delta2 > 1 plus the two part-size inequalities with M = ceil(k/6).
/// Also evaluates the equivalent single chain and refuses to answer if the
/// two forms ever disagree.
inline bool is_perfect(const bipartite_profile& p) {
  p.validate();
  const std::int64_t m = ceil_div(p.k, 6);
  const bool first = p.n1 * (m * (p.delta1 + 1) - 1) > p.n2 * ((m - 1) * (p.delta2 + 1) + 1);
  const bool second = p.n2 * (m * (p.delta2 + 1) - 1) > p.n1 * ((m - 1) * (p.delta1 + 1) + 1);
  const std::int64_t middle = m * (p.n1 * (p.delta1 + 1) - p.n2 * (p.delta2 + 1));
  const bool chain = p.n1 - p.n2 * p.delta2 < middle && middle < p.n1 * p.delta1 - p.n2;
  if (chain != (first && second))
    throw std::logic_error("perfect-graph inequality forms disagree for " + p.to_string());
  return p.delta1 * p.delta2 > 1 && first && second;
}

struct tian_xu_point {
  double p1 = 0.0;
  double p2 = 0.0;
  double u = 0.0;
  double v = 0.0;
  bool valid = false;  // 0<p1<1, 0<p2<1, u>0, v>0
};

/// Stationary point of the classical surface in closed form. u and v are
/// the values its two exponentials take there.
inline tian_xu_point tian_xu(const bipartite_profile& p) {
  p.validate();
  if (p.delta1 * p.delta2 == 1)
    throw degenerate_profile_error("delta1 * delta2 = 1 makes the classical point undefined");
  const std::int64_t m = ceil_div(p.k, 6);
  const double scale = static_cast<double>((2 * m - 1) * (p.delta1 * p.delta2 - 1));
  const double n1 = static_cast<double>(p.n1);
  const double n2 = static_cast<double>(p.n2);
  const double lo1 = static_cast<double>((m - 1) * (p.delta1 + 1) + 1);
  const double hi1 = static_cast<double>(m * (p.delta1 + 1) - 1);
  const double lo2 = static_cast<double>((m - 1) * (p.delta2 + 1) + 1);
  const double hi2 = static_cast<double>(m * (p.delta2 + 1) - 1);

  tian_xu_point t;
  t.u = (n2 * hi2 - n1 * lo1) / (n1 * scale);
  t.v = (n1 * hi1 - n2 * lo2) / (n2 * scale);
  if (t.u > 0.0 && t.v > 0.0) {
    t.p1 = (lo1 * std::log(t.u) - hi1 * std::log(t.v)) / scale;
    t.p2 = (lo2 * std::log(t.v) - hi2 * std::log(t.u)) / scale;
    t.valid = t.p1 > 0.0 && t.p1 < 1.0 && t.p2 > 0.0 && t.p2 < 1.0;
  } else {
    t.p1 = t.p2 = std::numeric_limits<double>::quiet_NaN();
  }
  return t;
}

/// n (1 + ln x) / x with x = (2M - 1)(delta + 1).
inline double tian_xu_closing_bound(std::int64_t n, std::int64_t delta, std::int64_t m) {
  const std::int64_t x = (2 * m - 1) * (delta + 1);
  if (x < 2) throw precondition_error("(2M - 1)(delta + 1) must be >= 2");
  const double xd = static_cast<double>(x);
  return static_cast<double>(n) * (1.0 + std::log(xd)) / xd;
}

inline double tian_xu_closing_bound(const bipartite_profile& p) {
  return tian_xu_closing_bound(p.n(), std::min(p.delta1, p.delta2), ceil_div(p.k, 6));
}

struct point2 {
  double p1 = 0.0;
  double p2 = 0.0;
};

struct minimum_2d {
  double p1 = 0.0;
  double p2 = 0.0;
  double value = 0.0;
  std::size_t sweeps = 0;
};

namespace detail {

/// Golden-section search of a convex function on [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498948482;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double best = 0.5 * (a + b);
  double fbest = f(best);
  for (double x : {lo, hi}) {
    double fx = f(x);
    if (fx < fbest) {
      fbest = fx;
      best = x;
    }
  }
  return best;
}

}  // namespace detail

/// Minimizes a surface over [0,1]^2: grid with step 1/512, then alternating
/// exact coordinate minimization until a sweep changes the value by less
/// than `tol`. Each sweep also tries a projected Newton step, which only
/// matters when the valley is narrow and diagonal.
inline minimum_2d minimize_on_unit_square(const exp_surface& f, double tol = 1e-13) {
  if (!(tol > 0.0)) throw precondition_error("tolerance must be positive");
  constexpr int grid = 512;
  minimum_2d best{0.0, 0.0, f(0.0, 0.0), 0};
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      const double p1 = static_cast<double>(i) / grid;
      const double p2 = static_cast<double>(j) / grid;
      const double v = f(p1, p2);
      if (v < best.value) best = {p1, p2, v, 0};
    }
  }

  double p1 = best.p1;
  double p2 = best.p2;
  double value = best.value;
  for (std::size_t sweep = 1; sweep <= 100000; ++sweep) {
    const double before = value;
    const double x = detail::golden_min([&](double t) { return f(t, p2); }, 0.0, 1.0);
    if (f(x, p2) <= value) {
      p1 = x;
      value = f(p1, p2);
    }
    const double y = detail::golden_min([&](double t) { return f(p1, t); }, 0.0, 1.0);
    if (f(p1, y) <= value) {
      p2 = y;
      value = f(p1, p2);
    }

    const auto g = f.gradient(p1, p2);
    const auto h = f.hessian(p1, p2);
    const double det = h[0] * h[3] - h[1] * h[2];
    if (det > 0.0) {
      double step = 1.0;
      const double d1 = -(h[3] * g[0] - h[1] * g[1]) / det;
      const double d2 = -(h[0] * g[1] - h[2] * g[0]) / det;
      for (int tries = 0; tries < 30; ++tries, step *= 0.5) {
        const double q1 = std::clamp(p1 + step * d1, 0.0, 1.0);
        const double q2 = std::clamp(p2 + step * d2, 0.0, 1.0);
        const double fq = f(q1, q2);
        if (fq < value) {
          p1 = q1;
          p2 = q2;
          value = fq;
          break;
        }
      }
    }
    best = {p1, p2, value, sweep};
    if (before - value < tol) break;
  }
  return best;
}

inline minimum_2d numeric_min_h_star(const bipartite_profile& p, double tol = 1e-13) {
  return minimize_on_unit_square(new_surface(p), tol);
}

inline minimum_2d numeric_min_h_old(const bipartite_profile& p, double tol = 1e-13) {
  return minimize_on_unit_square(old_surface(p), tol);
}

enum class even_case { i, ii, iii, none };

inline std::string_view to_string(even_case c) {
  switch (c) {
    case even_case::i: return "i";
    case even_case::ii: return "ii";
    case even_case::iii: return "iii";
    case even_case::none: return "none";
  }
  return "none";
}

/// Closed-form minimum for even k. For even k the improved coefficients
/// satisfy a11+1 = a21 and a22+1 = a12, so h* depends on (p1, p2) only
/// through n1 p1 + n2 p2 and a21 p1 + a12 p2.
struct even_k_minimum {
  even_case tag = even_case::none;
  double value = std::numeric_limits<double>::quiet_NaN();
  double ratio_12 = 0.0;  // n a12 / n2
  double ratio_21 = 0.0;  // n a21 / n1
  double t = 0.0;         // max of the two ratios
  // Case ii / iii: a single point. Case i: the segment a21 p1 + a12 p2 = ln T
  // clipped to the unit square, from `argmin` to `argmin_end`.
  point2 argmin;
  std::optional<point2> argmin_end;
  bound_coefficients coefficients;
};

inline even_k_minimum even_k_min(const bipartite_profile& p) {
  p.validate();
  if (p.k % 2 != 0) throw precondition_error("even_k_min needs even k; use the numeric minimizer");
  if (p.delta1 < 2 || p.delta2 < 2)
    throw precondition_error("even_k_min needs delta1, delta2 >= 2; use the numeric minimizer");

  even_k_minimum out;
  const auto c = coeff_new(p);
  out.coefficients = c;
  const double n = static_cast<double>(p.n());
  const double a12 = static_cast<double>(c.a12);
  const double a21 = static_cast<double>(c.a21);
  out.ratio_12 = n * a12 / static_cast<double>(p.n2);
  out.ratio_21 = n * a21 / static_cast<double>(p.n1);
  out.t = std::max(out.ratio_12, out.ratio_21);

  // Compare n a12 / n2 with n a21 / n1 exactly: a12 n1 vs a21 n2.
  const std::int64_t lhs = c.a12 * p.n1;
  const std::int64_t rhs = c.a21 * p.n2;
  const double log_t = std::log(out.t);

  if (lhs == rhs) {
    // Segment of the line a21 p1 + a12 p2 = ln T inside [0,1]^2.
    const double p1_at_0 = log_t / a21;   // crossing of p2 = 0
    const double p2_at_0 = log_t / a12;   // crossing of p1 = 0
    point2 start = p1_at_0 <= 1.0 ? point2{p1_at_0, 0.0} : point2{1.0, (log_t - a21) / a12};
    point2 end = p2_at_0 <= 1.0 ? point2{0.0, p2_at_0} : point2{(log_t - a12) / a21, 1.0};
    if (start.p2 > 1.0 || end.p1 > 1.0) return out;  // line misses the square
    out.tag = even_case::i;
    out.argmin = start;
    out.argmin_end = end;
  } else if (lhs < rhs && std::log(out.ratio_21) / a21 < 1.0) {
    out.tag = even_case::ii;
    out.argmin = {std::log(out.ratio_21) / a21, 0.0};
  } else if (lhs > rhs && std::log(out.ratio_12) / a12 < 1.0) {
    out.tag = even_case::iii;
    out.argmin = {0.0, std::log(out.ratio_12) / a12};
  } else {
    return out;
  }
  out.value = n * (1.0 + log_t) / out.t;
  return out;
}

/// Solution of grad h* = 0 for odd k. e1 and e2 are the values of the
/// second and first exponential of h* at the stationary point.
struct stationary_point {
  double e1 = 0.0;
  double e2 = 0.0;
  double p1_star = std::numeric_limits<double>::quiet_NaN();
  double p2_star = std::numeric_limits<double>::quiet_NaN();
  std::int64_t determinant = 0;  // (a11+1)(a22+1) - a12 a21
  bool feasible = false;         // e1>0, e2>0, 0<p1*<1, 0<p2*<1
  bound_coefficients coefficients;

  bool four_perfect() const { return e1 > 0.0 && e2 > 0.0; }
};

/// Solves
///   n1 (a11+1) e2 + n2 a21 e1 = n1
///   n1 a12 e2 + n2 (a22+1) e1 = n2
/// and then, when both values are positive,
///   (a11+1) p1 + a12 p2 = -ln e2
///   a21 p1 + (a22+1) p2 = -ln e1.
inline stationary_point odd_k_stationary(const bipartite_profile& p) {
  p.validate();
  if (p.k % 2 == 0) throw precondition_error("odd_k_stationary needs odd k");
  stationary_point s;
  const auto c = coeff_new(p);
  s.coefficients = c;
  s.determinant = c.determinant();
  if (s.determinant == 0)
    throw singular_system_error("stationary system is singular for " + p.to_string());

  const double det = static_cast<double>(s.determinant);
  const double n1 = static_cast<double>(p.n1);
  const double n2 = static_cast<double>(p.n2);
  // Numerators are exact integers; only the final division rounds.
  s.e1 = static_cast<double>(p.n2 * (c.a11 + 1) - p.n1 * c.a12) / (n2 * det);
  s.e2 = static_cast<double>(p.n1 * (c.a22 + 1) - p.n2 * c.a21) / (n1 * det);
  if (!s.four_perfect()) return s;

  const double l1 = std::log(s.e1);
  const double l2 = std::log(s.e2);
  s.p1_star = (-static_cast<double>(c.a22 + 1) * l2 + static_cast<double>(c.a12) * l1) / det;
  s.p2_star = (-static_cast<double>(c.a11 + 1) * l1 + static_cast<double>(c.a21) * l2) / det;
  s.feasible = s.p1_star > 0.0 && s.p1_star < 1.0 && s.p2_star > 0.0 && s.p2_star < 1.0;
  return s;
}

inline bool is_4perfect(const bipartite_profile& p) { return odd_k_stationary(p).four_perfect(); }

/// n1 (e2 + p1*) + n2 (e1 + p2*), the value of h* at a feasible stationary point.
inline double corollary_min(const bipartite_profile& p) {
  const auto s = odd_k_stationary(p);
  if (!s.feasible)
    throw inapplicable_error("stationary point is not feasible for " + p.to_string() +
                             "; use the numeric minimizer");
  const double value = static_cast<double>(p.n1) * (s.e2 + s.p1_star) +
                       static_cast<double>(p.n2) * (s.e1 + s.p2_star);
  const double direct = h_star(p, s.p1_star, s.p2_star);
  if (std::abs(value - direct) > 1e-9 * std::max(1.0, std::abs(direct)))
    throw std::logic_error("corollary value disagrees with h* at the stationary point");
  return value;
}

struct log_ratio_peak_result {
  double x_star = 0.0;
  double f_star = 0.0;
  bool below_one = false;  // a < 1, hence (a + ln x)/x < 1 for all x > 0
};

/// Peak of f(x) = (a + ln x) / x on x > 0.
inline log_ratio_peak_result log_ratio_peak(double a) {
  return {std::exp(1.0 - a), std::exp(a - 1.0), a < 1.0};
}

}  // namespace distdom
