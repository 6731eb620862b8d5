#pragma once

#include <cstdint>
#include <string_view>

namespace permlab {

// Decoration of a block composition: Plus is a direct sum, Minus a skew sum.
enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

inline constexpr Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

inline constexpr char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

inline constexpr std::string_view sign_name(Sign s) {
  return s == Sign::Plus ? "plus" : "minus";
}

// Outcome of comparing x and y under a random order.
enum class Comparison : std::uint8_t { Before, After, Incomparable };

}  // namespace permlab
