#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "sdiam/errors.hpp"

namespace sdiam {

// A length that is either a finite non-negative integer or Infinite.
// Infinite compares above every finite value and absorbs both + and *.
class ExtLength {
 public:
  constexpr ExtLength() noexcept = default;

  static constexpr ExtLength finite(std::int64_t v) {
    if (v < 0) throw domain_error("ExtLength cannot be negative");
    return ExtLength(v);
  }
  static constexpr ExtLength infinite() noexcept { return ExtLength(kInf); }

  constexpr bool is_finite() const noexcept { return v_ != kInf; }
  constexpr bool is_infinite() const noexcept { return v_ == kInf; }

  constexpr std::int64_t value() const {
    if (v_ == kInf) throw domain_error("value() of an infinite length");
    return v_;
  }

  friend constexpr bool operator==(ExtLength, ExtLength) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(ExtLength a,
                                                    ExtLength b) noexcept {
    return a.v_ <=> b.v_;
  }

  friend constexpr ExtLength operator+(ExtLength a, ExtLength b) noexcept {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return ExtLength(a.v_ + b.v_);
  }
  friend constexpr ExtLength operator*(ExtLength a, ExtLength b) noexcept {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return ExtLength(a.v_ * b.v_);
  }

  std::string to_string() const {
    return is_finite() ? std::to_string(v_) : std::string("inf");
  }

  friend std::ostream& operator<<(std::ostream& os, ExtLength x) {
    return os << x.to_string();
  }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  constexpr explicit ExtLength(std::int64_t v) noexcept : v_(v) {}
  std::int64_t v_ = 0;
};

// Comparisons against plain integers read naturally in claim checks.
constexpr bool operator==(ExtLength a, std::int64_t b) {
  return a.is_finite() && a.value() == b;
}
constexpr bool ext_le(ExtLength a, std::int64_t b) {
  return a.is_finite() && a.value() <= b;
}
constexpr bool ext_ge(ExtLength a, std::int64_t b) {
  return a.is_infinite() || a.value() >= b;
}

}  // namespace sdiam
