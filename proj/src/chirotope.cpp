#include "omt/chirotope.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "omt/error.hpp"

namespace omt {

namespace {

// Tuples never exceed the rank, and ranks stay small at desk scale.
constexpr int kMaxRank = 32;

std::uint64_t mask_of(std::span<const int> subset) {
  std::uint64_t m = 0;
  for (int e : subset) m |= std::uint64_t{1} << (e - 1);
  return m;
}

}  // namespace

Chirotope::Chirotope(int r, int n, std::vector<Sign> signs)
    : r_(r), n_(n), signs_(std::move(signs)) {
  if (r < 0 || n < 0 || n > kMaxGroundSize || r > n)
    throw std::invalid_argument("chirotope: need 0 <= r <= n <= 64");
  if (r > kMaxRank) throw std::invalid_argument("chirotope: rank too large");
  if (signs_.size() != binom(n, r))
    throw std::invalid_argument("chirotope: sign vector has wrong length");
}

Chirotope Chirotope::alternating(int r, int n) {
  if (r < 1 || r > n) throw std::invalid_argument("alternating: need 1 <= r <= n");
  return Chirotope(r, n, std::vector<Sign>(binom(n, r), Sign::Plus));
}

Sign Chirotope::sorted_value(std::span<const int> sorted) const {
  return signs_[subset_rank(sorted, n_)];
}

Sign Chirotope::value(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != r_)
    throw std::invalid_argument("chirotope value: tuple length != rank");
  std::array<int, kMaxRank> buf;
  std::copy(tuple.begin(), tuple.end(), buf.begin());
  for (int i = 0; i < r_; ++i)
    if (buf[i] < 1 || buf[i] > n_)
      throw std::invalid_argument("chirotope value: element out of range");
  int parity = sort_with_parity(std::span<int>(buf.data(), r_));
  if (parity == 0) return Sign::Zero;
  Sign v = signs_[subset_rank(std::span<const int>(buf.data(), r_), n_)];
  return parity > 0 ? v : -v;
}

bool Chirotope::is_zero_map() const {
  return std::all_of(signs_.begin(), signs_.end(),
                     [](Sign s) { return s == Sign::Zero; });
}

std::vector<std::vector<int>> Chirotope::bases() const {
  std::vector<std::vector<int>> out;
  if (r_ == 0) return out;
  std::vector<int> s = first_subset(r_);
  std::size_t idx = 0;
  do {
    if (signs_[idx++] != Sign::Zero) out.push_back(s);
  } while (next_subset(s, n_));
  return out;
}

const std::vector<std::uint64_t>& Chirotope::basis_masks() const {
  if (!masks_built_) {
    basis_masks_.clear();
    if (r_ > 0) {
      std::vector<int> s = first_subset(r_);
      std::size_t idx = 0;
      do {
        if (signs_[idx++] != Sign::Zero) basis_masks_.push_back(mask_of(s));
      } while (next_subset(s, n_));
    }
    masks_built_ = true;
  }
  return basis_masks_;
}

int Chirotope::rank_of(std::span<const int> subset) const {
  // rank(A) = max over bases B of |A ∩ B|: every independent subset of A
  // extends to a basis, and B ∩ A is independent.
  std::uint64_t a = mask_of(subset);
  int best = 0;
  for (std::uint64_t b : basis_masks())
    best = std::max(best, std::popcount(a & b));
  return best;
}

std::vector<int> Chirotope::flat_closure(std::span<const int> subset) const {
  int base_rank = rank_of(subset);
  std::vector<int> ext(subset.begin(), subset.end());
  ext.push_back(0);
  std::vector<int> flat;
  for (int e = 1; e <= n_; ++e) {
    ext.back() = e;
    if (rank_of(ext) == base_rank) flat.push_back(e);
  }
  return flat;  // sorted, contains the subset
}

std::vector<int> Chirotope::loops() const {
  std::uint64_t covered = 0;
  for (std::uint64_t b : basis_masks()) covered |= b;
  std::vector<int> out;
  for (int e = 1; e <= n_; ++e)
    if (!(covered >> (e - 1) & 1)) out.push_back(e);
  return out;
}

Chirotope Chirotope::reorient(std::span<const int> subset) const {
  std::uint64_t a = mask_of(subset);
  std::vector<Sign> out(signs_);
  if (r_ > 0) {
    std::vector<int> s = first_subset(r_);
    std::size_t idx = 0;
    do {
      if (std::popcount(mask_of(s) & a) % 2 == 1) out[idx] = -out[idx];
      ++idx;
    } while (next_subset(s, n_));
  }
  return Chirotope(r_, n_, std::move(out));
}

Chirotope Chirotope::relabel(const Permutation& p) const {
  if (p.size() != n_) throw std::invalid_argument("relabel: permutation size mismatch");
  // chi'(p(i1)..p(ir)) = chi(i1..ir): evaluate chi' directly on each sorted
  // tuple T as chi(p^{-1} T) through the alternating rule.
  Permutation pinv = p.inverse();
  std::vector<Sign> out(signs_.size(), Sign::Zero);
  if (r_ > 0) {
    std::vector<int> s = first_subset(r_);
    std::array<int, kMaxRank> pre;
    std::size_t idx = 0;
    do {
      for (int i = 0; i < r_; ++i) pre[i] = pinv(s[i]);
      int parity = sort_with_parity(std::span<int>(pre.data(), r_));
      Sign v = signs_[subset_rank(std::span<const int>(pre.data(), r_), n_)];
      out[idx++] = parity > 0 ? v : -v;
    } while (next_subset(s, n_));
  } else {
    out = signs_;
  }
  return Chirotope(r_, n_, std::move(out));
}

Chirotope Chirotope::restrict_to(std::span<const int> subset) const {
  std::vector<int> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end() ||
      (!s.empty() && (s.front() < 1 || s.back() > n_)))
    throw std::invalid_argument("restrict: not a subset of the ground set");
  int sub_rank = rank_of(s);

  // Completion: lexicographically first independent extension of the subset
  // to full rank; the restriction values are chi(T, completion).
  std::vector<int> completion;
  {
    std::vector<int> cur(s);
    int cur_rank = sub_rank;
    for (int e = 1; e <= n_ && cur_rank < r_; ++e) {
      cur.push_back(e);
      if (rank_of(cur) > cur_rank) {
        ++cur_rank;
        completion.push_back(e);
      } else {
        cur.pop_back();
      }
    }
    if (cur_rank < r_)
      throw ValidationError("restrict: ground set does not reach full rank");
  }

  int m = static_cast<int>(s.size());
  std::vector<Sign> out(binom(m, sub_rank), Sign::Zero);
  if (sub_rank == 0) {
    out[0] = r_ == 0 ? signs_[0] : value(completion);
  } else {
    std::vector<int> t = first_subset(sub_rank);
    std::array<int, kMaxRank> full;
    std::size_t idx = 0;
    do {
      for (int i = 0; i < sub_rank; ++i) full[i] = s[t[i] - 1];
      for (std::size_t i = 0; i < completion.size(); ++i)
        full[sub_rank + i] = completion[i];
      out[idx++] = value(std::span<const int>(full.data(), r_));
    } while (next_subset(t, m));
  }
  return Chirotope(sub_rank, m, std::move(out));
}

Chirotope Chirotope::contract(int e) const {
  if (e < 1 || e > n_) throw std::invalid_argument("contract: element out of range");
  if (r_ < 1) throw std::invalid_argument("contract: rank is already zero");
  {
    auto ls = loops();
    if (std::find(ls.begin(), ls.end(), e) != ls.end())
      throw std::invalid_argument("contract: element is a loop");
  }
  // chi/e on remaining elements relabeled 1..n-1 keeping order:
  // chi'(T) = chi(e, old(T)).
  std::vector<int> old_label;
  for (int x = 1; x <= n_; ++x)
    if (x != e) old_label.push_back(x);

  int rr = r_ - 1, nn = n_ - 1;
  std::vector<Sign> out(binom(nn, rr), Sign::Zero);
  if (rr >= 0) {
    std::array<int, kMaxRank> full;
    full[0] = e;
    if (rr == 0) {
      out[0] = value(std::span<const int>(full.data(), 1));
    } else {
      std::vector<int> t = first_subset(rr);
      std::size_t idx = 0;
      do {
        for (int i = 0; i < rr; ++i) full[i + 1] = old_label[t[i] - 1];
        out[idx++] = value(std::span<const int>(full.data(), r_));
      } while (next_subset(t, nn));
    }
  }
  return Chirotope(rr, nn, std::move(out));
}

Chirotope Chirotope::dual() const {
  int rr = n_ - r_;
  std::vector<Sign> out(binom(n_, rr), Sign::Zero);
  // chi*(T) = chi(comp T) * sgn(T, comp T); the concatenation's inversions
  // are exactly the pairs (t in T, c in comp) with t > c.
  auto fill = [&](const std::vector<int>& t, std::size_t idx) {
    std::vector<int> comp;
    std::uint64_t tm = mask_of(t);
    for (int x = 1; x <= n_; ++x)
      if (!(tm >> (x - 1) & 1)) comp.push_back(x);
    long long inversions = 0;
    for (int tv : t)
      for (int cv : comp)
        if (tv > cv) ++inversions;
    Sign v = r_ == 0 ? signs_[0] : sorted_value(comp);
    out[idx] = inversions % 2 == 0 ? v : -v;
  };
  if (rr == 0) {
    fill({}, 0);
  } else {
    std::vector<int> t = first_subset(rr);
    std::size_t idx = 0;
    do {
      fill(t, idx++);
    } while (next_subset(t, n_));
  }
  return Chirotope(rr, n_, std::move(out));
}

Chirotope Chirotope::negated() const {
  std::vector<Sign> out(signs_);
  for (Sign& s : out) s = -s;
  return Chirotope(r_, n_, std::move(out));
}

Chirotope Chirotope::canonical_rep() const {
  for (Sign s : signs_) {
    if (s == Sign::Plus) return *this;
    if (s == Sign::Minus) return negated();
  }
  return *this;
}

bool Chirotope::same_up_to_sign(const Chirotope& other) const {
  return canonical_rep() == other.canonical_rep();
}

std::string Chirotope::to_text() const {
  std::string out = std::to_string(r_) + " " + std::to_string(n_) + "\n";
  for (Sign s : signs_) out += to_char(s);
  out += '\n';
  return out;
}

Chirotope Chirotope::from_text(const std::string& text) {
  std::istringstream in(text);
  int r, n;
  if (!(in >> r >> n)) throw std::invalid_argument("chirotope text: bad header");
  std::string line;
  if (!(in >> line)) throw std::invalid_argument("chirotope text: missing sign row");
  std::string rest;
  if (in >> rest) throw std::invalid_argument("chirotope text: trailing content");
  if (r < 0 || n < 0 || n > kMaxGroundSize || r > n)
    throw std::invalid_argument("chirotope text: bad rank/size");
  if (line.size() != binom(n, r))
    throw std::invalid_argument("chirotope text: sign row has wrong length");
  std::vector<Sign> signs(line.size());
  for (std::size_t i = 0; i < line.size(); ++i) signs[i] = sign_from_char(line[i]);
  return Chirotope(r, n, std::move(signs));
}

}  // namespace omt
