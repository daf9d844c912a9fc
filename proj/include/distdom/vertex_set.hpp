#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace distdom {

using vertex_t = std::size_t;

/// Fixed-universe bitset over {0, ..., universe-1}.
class vertex_set {
 public:
  vertex_set() = default;
  explicit vertex_set(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  vertex_set(std::size_t universe, std::initializer_list<vertex_t> members)
      : vertex_set(universe) {
    for (vertex_t v : members) insert(v);
  }

  static vertex_set full(std::size_t universe) {
    vertex_set s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    s.trim();
    return s;
  }

  template <typename Range>
  static vertex_set of(std::size_t universe, const Range& members) {
    vertex_set s(universe);
    for (vertex_t v : members) s.insert(v);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  void insert(vertex_t v) {
    assert(v < universe_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(vertex_t v) {
    assert(v < universe_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  bool contains(vertex_t v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  bool is_full() const noexcept { return size() == universe_; }

  /// |this \ other|
  std::size_t count_missing_from(const vertex_set& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
    return c;
  }
  bool intersects(const vertex_set& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  vertex_set& operator|=(const vertex_set& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  vertex_set& operator&=(const vertex_set& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  friend vertex_set operator|(vertex_set a, const vertex_set& b) { return a |= b; }
  friend vertex_set operator&(vertex_set a, const vertex_set& b) { return a &= b; }

  /// Sorted member list.
  std::vector<vertex_t> members() const {
    std::vector<vertex_t> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const vertex_set&, const vertex_set&) = default;

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace distdom
