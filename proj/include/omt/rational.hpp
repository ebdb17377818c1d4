// Exact integers and rationals.
//
// Rational is Boost.Multiprecision's cpp_rational: always gcd-reduced with a
// positive denominator, which is exactly the canonical form the rest of the
// library assumes. Serialization is "p/q" with "/q" omitted when q == 1, and
// parsing accepts the same shape (plus plain integers).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

#include "omt/sign.hpp"

namespace omt {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Sign sign_of(const Rational& q) {
  int s = q.sign();
  return s < 0 ? Sign::Minus : (s > 0 ? Sign::Plus : Sign::Zero);
}

inline std::string to_string(const Rational& q) { return q.str(); }

// Parses "p", "-p", "p/q". Rejects empty strings, stray characters and zero
// denominators rather than letting boost swallow them silently.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto parse_int = [](const std::string& part) -> Int {
    if (part.empty() || part == "-" || part == "+")
      throw std::invalid_argument("bad integer literal '" + part + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("bad integer literal '" + part + "'");
    // boost's parser accepts a leading '-' but balks at an explicit '+'.
    return Int(part[0] == '+' ? part.substr(1) : part);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace omt
