#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace clustervd {

/// A non-negative integer extended with a top element `infinity()`.
/// Infinity absorbs addition and compares greater than every finite value.
class ExtInt {
 public:
  constexpr ExtInt() noexcept = default;
  constexpr ExtInt(std::int64_t v) noexcept : value_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtInt infinity() noexcept {
    ExtInt e;
    e.value_ = kInf;
    return e;
  }

  constexpr bool is_finite() const noexcept { return value_ != kInf; }
  constexpr bool is_infinite() const noexcept { return value_ == kInf; }

  /// Finite value; undefined for infinity (callers check is_finite()).
  constexpr std::int64_t value() const noexcept { return value_; }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) noexcept {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtInt(a.value_ + b.value_);
  }
  friend constexpr auto operator<=>(const ExtInt&, const ExtInt&) noexcept = default;
  friend constexpr bool operator==(const ExtInt&, const ExtInt&) noexcept = default;

  std::string to_string() const {
    return is_finite() ? std::to_string(value_) : std::string("infinity");
  }
  friend std::ostream& operator<<(std::ostream& os, ExtInt e) { return os << e.to_string(); }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = 0;
};

constexpr ExtInt min(ExtInt a, ExtInt b) noexcept { return b < a ? b : a; }

}  // namespace clustervd
