#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace rd2 {

// Nonnegative solution weight extended with an infinity marking infeasible
// DP classes. Addition saturates (inf + x = inf); infinity compares largest,
// so std::min over Weight discards infeasible terms.
struct Weight {
  static constexpr std::uint64_t kInfRaw = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t raw = 0;

  static constexpr Weight inf() { return {kInfRaw}; }
  constexpr bool finite() const { return raw != kInfRaw; }
  constexpr std::uint64_t value() const { return raw; }

  // Saturating add without a branch: with infinity at the top of the range,
  // any wraparound means an operand was infinite.
  friend constexpr Weight operator+(Weight a, Weight b) {
    const std::uint64_t s = a.raw + b.raw;
    return {s < a.raw ? kInfRaw : s};
  }
  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;

  std::string str() const { return finite() ? std::to_string(raw) : "inf"; }
};

}  // namespace rd2
