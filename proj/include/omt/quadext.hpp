// Exact arithmetic in Q(sqrt5): numbers a + b*sqrt5 with rational a, b.
//
// This is a field, so Bareiss-style exact elimination works over it. The sign
// of a + b*sqrt5 is decided without any floating point: when a and b disagree
// in sign, compare a^2 against 5 b^2 to see which term dominates.
#pragma once

#include <string>

#include "omt/rational.hpp"
#include "omt/sign.hpp"

namespace omt {

class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int v) : a_(v) {}                      // NOLINT: intentional implicit
  QuadExt(Rational a) : a_(std::move(a)) {}      // NOLINT: intentional implicit
  QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt sqrt5() { return QuadExt(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    // 1/(a + b sqrt5) = (a - b sqrt5) / (a^2 - 5 b^2); the norm vanishes only
    // at zero because sqrt5 is irrational.
    Rational norm = y.a_ * y.a_ - 5 * y.b_ * y.b_;
    if (norm == 0) throw std::invalid_argument("division by zero in Q(sqrt5)");
    return QuadExt((x.a_ * y.a_ - 5 * x.b_ * y.b_) / norm,
                   (x.b_ * y.a_ - x.a_ * y.b_) / norm);
  }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

 private:
  Rational a_;  // rational part
  Rational b_;  // coefficient of sqrt5
};

inline Sign sign_of(const QuadExt& x) {
  Sign sa = sign_of(x.rational_part());
  Sign sb = sign_of(x.sqrt5_part());
  if (sb == Sign::Zero) return sa;
  if (sa == Sign::Zero) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b| sqrt5 decides, i.e. a^2 vs 5 b^2.
  const Rational& a = x.rational_part();
  const Rational& b = x.sqrt5_part();
  Sign dominance = sign_of(Rational(a * a - 5 * b * b));  // + when |a| wins
  return dominance == Sign::Zero ? Sign::Zero : (dominance == Sign::Plus ? sa : sb);
}

inline std::string to_string(const QuadExt& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  const Rational& b = x.sqrt5_part();
  std::string head = to_string(x.rational_part());
  if (b > 0) return head + "+" + to_string(b) + "*sqrt5";
  return head + "-" + to_string(Rational(-b)) + "*sqrt5";
}

// Accepts "A", "A+B*sqrt5", "A-B*sqrt5" and the shorthand "B*sqrt5", with A
// and B rational literals (B unsigned in the two-term forms).
inline QuadExt parse_quadext(const std::string& text) {
  auto star = text.rfind("*sqrt5");
  if (star == std::string::npos) {
    if (text.find("sqrt") != std::string::npos)
      throw std::invalid_argument("bad Q(sqrt5) literal '" + text + "'");
    return QuadExt(parse_rational(text));
  }
  if (star + 6 != text.size())
    throw std::invalid_argument("bad Q(sqrt5) literal '" + text + "'");
  std::string body = text.substr(0, star);
  // Split at the sign separating A from B; it is the last '+'/'-' beyond
  // position 0 (B is unsigned there). No separator means a pure multiple.
  std::size_t sep = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') { sep = i; break; }
  }
  if (sep == std::string::npos) return QuadExt(Rational(0), parse_rational(body));
  Rational a = parse_rational(body.substr(0, sep));
  Rational babs = parse_rational(body.substr(sep + 1));
  return QuadExt(a, body[sep] == '-' ? Rational(-babs) : babs);
}

}  // namespace omt
