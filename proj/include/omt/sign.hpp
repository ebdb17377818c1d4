// Three-valued sign type used for chirotope entries and sign vectors.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace omt {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign sign_of_int(long long v) {
  return v < 0 ? Sign::Minus : (v > 0 ? Sign::Plus : Sign::Zero);
}

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-to_int(s)); }

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(to_int(a) * to_int(b));
}

constexpr char to_char(Sign s) {
  return s == Sign::Plus ? '+' : (s == Sign::Minus ? '-' : '0');
}

inline Sign sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    default:
      throw std::invalid_argument(std::string("invalid sign character '") + c + "'");
  }
}

}  // namespace omt
