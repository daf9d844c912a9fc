#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "distdom/errors.hpp"
#include "distdom/graph.hpp"

namespace distdom {

/// Part sizes, per-part minimum degrees and the radius k. Every bound
/// formula is a function of these five integers only.
struct bipartite_profile {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t delta1 = 0;  // min degree over V1
  std::int64_t delta2 = 0;  // min degree over V2
  std::int64_t k = 0;

  std::int64_t n() const noexcept { return n1 + n2; }

  bool valid() const noexcept {
    return n1 >= 1 && n2 >= 1 && delta1 >= 1 && delta1 <= n2 && delta2 >= 1 && delta2 <= n1 &&
           k >= 1;
  }

  void validate() const {
    if (!valid()) throw precondition_error("invalid bipartite profile " + to_string());
  }

  bipartite_profile swapped() const { return {n2, n1, delta2, delta1, k}; }

  std::string to_string() const {
    return "(n1=" + std::to_string(n1) + ", n2=" + std::to_string(n2) +
           ", delta1=" + std::to_string(delta1) + ", delta2=" + std::to_string(delta2) +
           ", k=" + std::to_string(k) + ")";
  }

  friend bool operator==(const bipartite_profile&, const bipartite_profile&) = default;
};

inline bipartite_profile profile(const graph& g, const bipartition& b, std::int64_t k) {
  if (!is_valid_bipartition(g, b)) throw precondition_error("bipartition does not match graph");
  bipartite_profile p;
  p.n1 = static_cast<std::int64_t>(b.v1_count);
  p.n2 = static_cast<std::int64_t>(b.v2_count);
  p.k = k;
  std::size_t d1 = unreachable;
  std::size_t d2 = unreachable;
  for (vertex_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0)
      throw precondition_error("isolated vertex " + std::to_string(v) + " has no minimum degree");
    auto& slot = b.in_v1(v) ? d1 : d2;
    slot = std::min(slot, g.degree(v));
  }
  if (d1 == unreachable || d2 == unreachable) throw precondition_error("empty bipartition side");
  p.delta1 = static_cast<std::int64_t>(d1);
  p.delta2 = static_cast<std::int64_t>(d2);
  p.validate();
  return p;
}

}  // namespace distdom
