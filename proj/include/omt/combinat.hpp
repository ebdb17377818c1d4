// Subset combinatorics: binomials, lexicographic rank/unrank of sorted
// r-subsets of {1..n}, lexicographic successor, and sorting with parity.
// Ground sets are 1-based and capped at 64 elements so subsets fit in a
// uint64_t bitmask when callers want one.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace omt {

inline constexpr int kMaxGroundSize = 64;

inline std::uint64_t binom(int n, int k) {
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> t(kMaxGroundSize + 1);
    for (int i = 0; i <= kMaxGroundSize; ++i) {
      t[i].resize(i + 1);
      t[i][0] = t[i][i] = 1;
      for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > kMaxGroundSize) throw std::invalid_argument("binom: n exceeds 64");
  return table[n][k];
}

// Lexicographic rank (0-based) of a strictly increasing r-subset of {1..n}.
inline std::size_t subset_rank(std::span<const int> s, int n) {
  int r = static_cast<int>(s.size());
  std::size_t rank = 0;
  int prev = 0;
  for (int i = 0; i < r; ++i) {
    for (int v = prev + 1; v < s[i]; ++v)
      rank += binom(n - v, r - 1 - i);
    prev = s[i];
  }
  return rank;
}

inline std::vector<int> subset_unrank(std::size_t rank, int n, int r) {
  std::vector<int> s(r);
  int v = 1;
  for (int i = 0; i < r; ++i) {
    while (true) {
      std::uint64_t block = binom(n - v, r - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    s[i] = v++;
  }
  return s;
}

// First r-subset in lex order: {1, 2, ..., r}.
inline std::vector<int> first_subset(int r) {
  std::vector<int> s(r);
  for (int i = 0; i < r; ++i) s[i] = i + 1;
  return s;
}

// Advances to the lex successor among r-subsets of {1..n}; false at the end.
inline bool next_subset(std::vector<int>& s, int n) {
  int r = static_cast<int>(s.size());
  for (int i = r - 1; i >= 0; --i) {
    if (s[i] < n - (r - 1 - i)) {
      ++s[i];
      for (int j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Sorts a short tuple in place; returns the permutation parity (+1/-1), or 0
// if two entries coincide. Insertion sort — tuples here have length <= rank.
inline int sort_with_parity(std::span<int> t) {
  int parity = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    int x = t[i];
    std::size_t j = i;
    while (j > 0 && t[j - 1] > x) {
      t[j] = t[j - 1];
      parity = -parity;
      --j;
    }
    t[j] = x;
  }
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return 0;
  return parity;
}

}  // namespace omt
