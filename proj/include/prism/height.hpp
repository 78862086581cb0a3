#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace prism {

/// A value in N ∪ {∞}. Ordinal heights beyond the naturals collapse to ∞.
class Height {
 public:
  constexpr Height() = default;
  constexpr explicit Height(std::uint32_t v) : value_(v) {}

  static constexpr Height infinity() {
    Height h;
    h.infinite_ = true;
    return h;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }
  constexpr std::uint32_t value() const { return value_; }

  constexpr Height successor() const {
    return infinite_ ? infinity() : Height(value_ + 1);
  }

  friend constexpr bool operator==(const Height& a, const Height& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Height& a, const Height& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  std::uint32_t value_ = 0;
  bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const Height& h) { return os << h.str(); }

}  // namespace prism
