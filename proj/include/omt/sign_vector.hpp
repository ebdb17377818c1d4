// Sign vectors over the ground set {1..n}: covectors, cocircuits, and the
// composition/separation operations on them. The canonical order used
// everywhere (dumps, "lexicographically smallest" results) is plain byte
// order of the string form, where '+' < '-' < '0' happens to hold in ASCII.
#pragma once

#include <string>
#include <vector>

#include "omt/sign.hpp"

namespace omt {

class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(int n) : v_(n, Sign::Zero) {}
  explicit SignVector(std::vector<Sign> v) : v_(std::move(v)) {}

  static SignVector from_string(const std::string& s) {
    std::vector<Sign> v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) v[i] = sign_from_char(s[i]);
    return SignVector(std::move(v));
  }

  int size() const { return static_cast<int>(v_.size()); }
  Sign operator[](int e) const { return v_[e - 1]; }  // 1-based
  void set(int e, Sign s) { v_[e - 1] = s; }

  bool is_zero() const {
    for (Sign s : v_)
      if (s != Sign::Zero) return false;
    return true;
  }

  SignVector negated() const {
    std::vector<Sign> out(v_);
    for (Sign& s : out) s = -s;
    return SignVector(std::move(out));
  }

  std::vector<int> support() const {
    std::vector<int> out;
    for (int e = 1; e <= size(); ++e)
      if (v_[e - 1] != Sign::Zero) out.push_back(e);
    return out;
  }

  std::vector<int> zero_set() const {
    std::vector<int> out;
    for (int e = 1; e <= size(); ++e)
      if (v_[e - 1] == Sign::Zero) out.push_back(e);
    return out;
  }

  // Elements where the two vectors carry strictly opposite signs.
  std::vector<int> separator(const SignVector& y) const {
    std::vector<int> out;
    for (int e = 1; e <= size(); ++e)
      if (v_[e - 1] != Sign::Zero && y.v_[e - 1] == -v_[e - 1]) out.push_back(e);
    return out;
  }

  // this(e) in {0, y(e)} for every e.
  bool conforms_to(const SignVector& y) const {
    for (int i = 0; i < size(); ++i)
      if (v_[i] != Sign::Zero && v_[i] != y.v_[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s(v_.size(), '0');
    for (std::size_t i = 0; i < v_.size(); ++i) s[i] = to_char(v_[i]);
    return s;
  }

  friend SignVector compose(const SignVector& x, const SignVector& y) {
    std::vector<Sign> out(x.v_);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i] == Sign::Zero) out[i] = y.v_[i];
    return SignVector(std::move(out));
  }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend bool operator<(const SignVector& a, const SignVector& b) {
    for (std::size_t i = 0; i < a.v_.size() && i < b.v_.size(); ++i) {
      char ca = to_char(a.v_[i]), cb = to_char(b.v_[i]);
      if (ca != cb) return ca < cb;
    }
    return a.v_.size() < b.v_.size();
  }

 private:
  std::vector<Sign> v_;
};

}  // namespace omt
