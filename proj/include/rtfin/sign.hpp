#pragma once

#include <cstdint>
#include <string_view>

namespace rtfin {

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

constexpr Sign& operator*=(Sign& a, Sign b) { return a = a * b; }

constexpr Sign sign_of_int(std::int64_t v) {
  return v > 0 ? Sign::Positive : (v < 0 ? Sign::Negative : Sign::Zero);
}

constexpr std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "-";
    case Sign::Zero: return "0";
    case Sign::Positive: return "+";
  }
  return "?";
}

}  // namespace rtfin
