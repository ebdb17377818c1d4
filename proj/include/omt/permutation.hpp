// Permutations of the ground set {1..n}, one-line notation.
#pragma once

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace omt {

class Permutation {
 public:
  Permutation() = default;
  // images[i-1] is the image of i.
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    int n = static_cast<int>(img_.size());
    std::vector<bool> seen(n, false);
    for (int v : img_) {
      if (v < 1 || v > n || seen[v - 1])
        throw std::invalid_argument("not a permutation of 1..n");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  // (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
      throw std::invalid_argument("permutation size mismatch");
    std::vector<int> img(p.size());
    for (int i = 1; i <= p.size(); ++i) img[i - 1] = p(q(i));
    return Permutation(std::move(img));
  }

  Permutation inverse() const {
    std::vector<int> img(size());
    for (int i = 1; i <= size(); ++i) img[(*this)(i)-1] = i;
    return Permutation(std::move(img));
  }

  int order() const {
    Permutation p = *this;
    int k = 1;
    while (!p.is_identity()) {
      p = *this * p;
      ++k;
    }
    return k;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(size(), false);
    for (int i = 1; i <= size(); ++i) {
      if (seen[i - 1]) continue;
      std::vector<int> c;
      for (int j = i; !seen[j - 1]; j = (*this)(j)) {
        seen[j - 1] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 1; i <= size(); ++i) {
      if (i > 1) s += ' ';
      s += std::to_string((*this)(i));
    }
    return s;
  }

  static Permutation parse(const std::string& text, int n = -1) {
    std::istringstream in(text);
    std::vector<int> img;
    int v;
    while (in >> v) img.push_back(v);
    if (!in.eof()) throw std::invalid_argument("bad permutation literal");
    if (n >= 0 && static_cast<int>(img.size()) != n)
      throw std::invalid_argument("permutation has wrong length");
    return Permutation(std::move(img));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

 private:
  std::vector<int> img_;
};

}  // namespace omt
