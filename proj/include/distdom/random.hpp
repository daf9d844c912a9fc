#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace distdom {

/// Every seeded routine draws from std::mt19937_64, whose 64-bit state
/// transition is fixed by the C++ standard. The distribution helpers below
/// replace the implementation-defined std:: distributions so that a seed
/// gives the same stream with every standard library.
using rng = std::mt19937_64;
inline constexpr std::string_view rng_name = "mt19937_64";

/// Uniform in [0, 1) from the top 53 bits.
inline double unit_double(rng& r) { return static_cast<double>(r() >> 11) * 0x1.0p-53; }

/// Uniform in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(rng& r, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = r();
  } while (x >= limit);
  return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& items, rng& r) {
  for (std::size_t i = items.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(uniform_below(r, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace distdom
