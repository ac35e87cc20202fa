#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <type_traits>
#include <vector>

#include "sdiam/errors.hpp"

namespace sdiam {

// A set of vertex indices in [0, 64), stored as a bitmask.
class VertexSet {
 public:
  static constexpr int capacity = 64;

  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  static VertexSet from(const std::vector<int>& members) {
    VertexSet s;
    for (int v : members) {
      if (s.contains_checked(v)) throw domain_error("duplicate vertex " + std::to_string(v));
      s.insert(v);
    }
    return s;
  }

  // {0, ..., n-1}
  static constexpr VertexSet first(int n) noexcept {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) noexcept {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr int min() const noexcept { return std::countr_zero(bits_); }

  void insert(int v) {
    if (v < 0 || v >= capacity) throw domain_error("vertex index out of range: " + std::to_string(v));
    bits_ |= std::uint64_t{1} << v;
  }
  constexpr void erase(int v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

  // True iff every member is a vertex of a graph of order n.
  constexpr bool fits(int n) const noexcept {
    return (bits_ & ~first(n).bits_) == 0;
  }
  constexpr bool subset_of(VertexSet o) const noexcept {
    return (bits_ & ~o.bits_) == 0;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;
  // Orders by bitmask value; used only for deterministic sorting.
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) noexcept { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) noexcept { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for (int v : *this) {
      if (!first_item) s += ",";
      s += std::to_string(v);
      first_item = false;
    }
    return s + "}";
  }

 private:
  bool contains_checked(int v) const {
    return v >= 0 && v < capacity && contains(v);
  }
  std::uint64_t bits_ = 0;
};

// Calls fn(VertexSet) for every subset of `universe` with exactly k members,
// in increasing order of the subset's rank among C(|universe|, k). Stops early
// if fn returns false (when fn returns bool).
template <typename Fn>
void for_each_subset_of_size(VertexSet universe, int k, Fn&& fn) {
  std::array<int, VertexSet::capacity> members{};
  int m = 0;
  for (int v : universe) members[m++] = v;
  if (k < 0 || k > m) return;
  std::array<int, VertexSet::capacity> idx{};
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (int i = 0; i < k; ++i) bits |= std::uint64_t{1} << members[idx[i]];
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, VertexSet>, bool>) {
      if (!fn(VertexSet(bits))) return;
    } else {
      fn(VertexSet(bits));
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace sdiam
