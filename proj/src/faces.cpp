#include "omt/faces.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "omt/error.hpp"

namespace omt {

namespace {

std::uint64_t zero_mask(const SignVector& v) {
  std::uint64_t m = 0;
  for (int e = 1; e <= v.size(); ++e)
    if (v[e] == Sign::Zero) m |= std::uint64_t{1} << (e - 1);
  return m;
}

constexpr char kByteOrder[3] = {'+', '-', '0'};

// Sorted-view matcher. Covector strings compare in plain byte order; a query
// fixes some positions, leaves others free, and may require a zero somewhere
// in a tracked position set. Queries descend the implicit trie, narrowing an
// index range by binary search at each position.
struct MatchView {
  const std::vector<std::string>* strs;
  std::vector<int> order;  // indices into strs, sorted by string

  explicit MatchView(const std::vector<std::string>& s) : strs(&s) {
    order.resize(s.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s[a] < s[b]; });
  }

  // [lo,hi) all share the first `pos` characters; returns the subrange whose
  // character at `pos` equals c.
  std::pair<int, int> narrow(int lo, int hi, int pos, char c) const {
    auto at = [&](int k) { return (*strs)[order[k]][pos]; };
    int l = lo, r = hi;
    while (l < r) {  // first index with at(k) >= c
      int mid = (l + r) / 2;
      if (at(mid) < c) l = mid + 1; else r = mid;
    }
    int first = l;
    r = hi;
    while (l < r) {  // first index with at(k) > c
      int mid = (l + r) / 2;
      if (at(mid) <= c) l = mid + 1; else r = mid;
    }
    return {first, l};
  }
};

// Existence query for V3: a vector equal to `target` outside the separator,
// zero at e_pos, free at the remaining separator positions.
struct V3Query {
  const MatchView& view;
  const std::string& target;
  std::uint64_t sep_mask;
  int e_pos;
  int n;

  bool run() const { return rec(0, static_cast<int>(view.order.size()), 0); }

  bool rec(int lo, int hi, int pos) const {
    if (lo >= hi) return false;
    if (pos == n) return true;
    if (pos == e_pos) {
      auto [l2, h2] = view.narrow(lo, hi, pos, '0');
      return rec(l2, h2, pos + 1);
    }
    if (sep_mask >> pos & 1) {
      for (char c : kByteOrder) {
        auto [l2, h2] = view.narrow(lo, hi, pos, c);
        if (l2 < h2 && rec(l2, h2, pos + 1)) return true;
      }
      return false;
    }
    auto [l2, h2] = view.narrow(lo, hi, pos, target[pos]);
    return rec(l2, h2, pos + 1);
  }
};

// Generalized lex-first search used by eliminate: allowed[pos] lists the
// permitted characters; at least one position of need_zero_mask must be '0'.
struct GeneralQuery {
  const MatchView& view;
  const std::vector<std::array<bool, 3>>& allowed;  // indexed by byte order
  std::uint64_t need_zero_mask;
  int n;
  int last_need = -1;

  int run() {
    for (int p = 0; p < n; ++p)
      if (need_zero_mask >> p & 1) last_need = p;
    return rec(0, static_cast<int>(view.order.size()), 0, need_zero_mask == 0);
  }

  int rec(int lo, int hi, int pos, bool satisfied) const {
    if (lo >= hi) return -1;
    if (pos == n) return satisfied ? view.order[lo] : -1;
    for (int k = 0; k < 3; ++k) {
      if (!allowed[pos][k]) continue;
      char c = kByteOrder[k];
      auto [l2, h2] = view.narrow(lo, hi, pos, c);
      if (l2 >= h2) continue;
      bool sat2 = satisfied || (c == '0' && (need_zero_mask >> pos & 1));
      if (!sat2 && last_need <= pos) continue;
      int r = rec(l2, h2, pos + 1, sat2);
      if (r >= 0) return r;
    }
    return -1;
  }
};

}  // namespace

std::vector<SignVector> cocircuits(const Chirotope& chi) {
  int r = chi.rank(), n = chi.ground_size();
  std::vector<SignVector> out;
  if (r == 0) return out;

  std::unordered_set<std::uint64_t> seen_flats;
  std::array<int, 33> buf;
  auto scan = [&](std::span<const int> y) {
    for (int i = 0; i < r - 1; ++i) buf[i] = y[i];
    SignVector c(n);
    bool nonzero = false;
    for (int e = 1; e <= n; ++e) {
      buf[r - 1] = e;
      Sign v = chi.value(std::span<const int>(buf.data(), r));
      if (v != Sign::Zero) nonzero = true;
      c.set(e, v);
    }
    if (!nonzero) return;  // dependent spanning set
    if (!seen_flats.insert(zero_mask(c)).second) return;
    out.push_back(c.negated());
    out.push_back(std::move(c));
  };

  if (r == 1) {
    scan(std::span<const int>{});
  } else {
    std::vector<int> y = first_subset(r - 1);
    do {
      scan(y);
    } while (next_subset(y, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignVector> covectors(const Chirotope& chi, std::size_t size_cap) {
  int n = chi.ground_size();
  auto cocs = cocircuits(chi);

  std::vector<SignVector> all;
  std::unordered_set<std::string> seen;
  std::deque<int> queue;  // indices into all
  auto push = [&](SignVector v) {
    if (!seen.insert(v.to_string()).second) return;
    if (seen.size() > size_cap)
      throw ValidationError("covector enumeration exceeds the size cap");
    all.push_back(std::move(v));
    queue.push_back(static_cast<int>(all.size()) - 1);
  };

  push(SignVector(n));
  for (const auto& c : cocs) push(c);
  // Every covector is a left-associated composition of cocircuits, so
  // composing the frontier with cocircuits only is a complete closure.
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (const auto& c : cocs) push(compose(all[i], c));
  }
  std::sort(all.begin(), all.end());
  return all;
}

CovectorReport check_covector_axioms(const std::vector<SignVector>& covs,
                                     std::size_t max_violations) {
  CovectorReport report;
  auto fail = [&](std::string axiom, std::string detail) {
    report.passed = false;
    if (report.violations.size() < max_violations)
      report.violations.push_back({std::move(axiom), std::move(detail)});
    return report.violations.size() >= max_violations;  // true = stop checking
  };

  if (covs.empty()) {
    fail("V0", "empty covector set");
    return report;
  }
  int n = covs[0].size();

  std::vector<std::string> strs(covs.size());
  std::unordered_set<std::string> values;
  for (std::size_t i = 0; i < covs.size(); ++i) {
    if (covs[i].size() != n) {
      fail("V0", "covectors of mixed lengths");
      return report;
    }
    strs[i] = covs[i].to_string();
    values.insert(strs[i]);
  }

  if (!values.count(std::string(n, '0'))) {
    if (fail("V0", "zero vector missing")) return report;
  }

  for (std::size_t i = 0; i < covs.size(); ++i) {
    if (!values.count(covs[i].negated().to_string())) {
      if (fail("V1", "negation of " + strs[i] + " missing")) return report;
    }
  }

  // V2 over all ordered pairs, composing into a reused buffer.
  std::string buf(n, '0');
  for (std::size_t i = 0; i < covs.size(); ++i) {
    for (std::size_t j = 0; j < covs.size(); ++j) {
      for (int p = 0; p < n; ++p)
        buf[p] = strs[i][p] != '0' ? strs[i][p] : strs[j][p];
      if (!values.count(buf)) {
        if (fail("V2", strs[i] + " o " + strs[j] + " = " + buf + " missing"))
          return report;
      }
    }
  }

  // V3. X∘Y and Y∘X agree outside the separator and the witness condition
  // only reads X∘Y there, so unordered pairs suffice.
  MatchView view(strs);
  for (std::size_t i = 0; i < covs.size(); ++i) {
    for (std::size_t j = i + 1; j < covs.size(); ++j) {
      std::uint64_t sep = 0;
      for (int p = 0; p < n; ++p) {
        char a = strs[i][p], b = strs[j][p];
        buf[p] = a != '0' ? a : b;
        if (a != '0' && b != '0' && a != b) sep |= std::uint64_t{1} << p;
      }
      if (!sep) continue;
      for (int p = 0; p < n; ++p) {
        if (!(sep >> p & 1)) continue;
        V3Query q{view, buf, sep, p, n};
        if (!q.run()) {
          if (fail("V3", "no witness for X=" + strs[i] + " Y=" + strs[j] +
                             " at element " + std::to_string(p + 1)))
            return report;
        }
      }
    }
  }
  return report;
}

SignVector eliminate(const std::vector<SignVector>& covs, const SignVector& x,
                     const SignVector& y, int e, bool conformal,
                     const std::vector<int>& u) {
  int n = x.size();
  if (y.size() != n) throw std::invalid_argument("eliminate: length mismatch");

  std::vector<std::string> strs(covs.size());
  for (std::size_t i = 0; i < covs.size(); ++i) strs[i] = covs[i].to_string();
  std::unordered_set<std::string> values(strs.begin(), strs.end());
  if (!values.count(x.to_string()) || !values.count(y.to_string()))
    throw std::invalid_argument("eliminate: X and Y must belong to the covector set");

  std::vector<int> sep = x.separator(y);
  auto in_sep = [&](int f) { return std::binary_search(sep.begin(), sep.end(), f); };
  SignVector d = compose(x, y);

  std::vector<std::array<bool, 3>> allowed(n, {false, false, false});
  auto allow = [&](int pos, char c) {
    allowed[pos][c == '+' ? 0 : (c == '-' ? 1 : 2)] = true;
  };
  std::uint64_t need_zero = 0;

  if (!conformal) {
    if (!in_sep(e))
      throw std::invalid_argument("eliminate: e must lie in the separator");
    for (int f = 1; f <= n; ++f) {
      if (f == e) {
        allow(f - 1, '0');
      } else if (in_sep(f)) {
        allow(f - 1, '+'); allow(f - 1, '-'); allow(f - 1, '0');
      } else {
        allow(f - 1, to_char(d[f]));
      }
    }
  } else {
    std::vector<int> uu = u.empty() ? sep : u;
    std::sort(uu.begin(), uu.end());
    if (uu.empty()) throw std::invalid_argument("eliminate: empty separator");
    for (int f : uu) {
      if (!in_sep(f))
        throw std::invalid_argument("eliminate: U must lie inside the separator");
    }
    auto in_u = [&](int f) { return std::binary_search(uu.begin(), uu.end(), f); };
    for (int f = 1; f <= n; ++f) {
      if (in_u(f)) {
        allow(f - 1, to_char(y[f]));  // conformal to Y on U
        allow(f - 1, '0');
        need_zero |= std::uint64_t{1} << (f - 1);
      } else if (in_sep(f)) {
        allow(f - 1, '+'); allow(f - 1, '-'); allow(f - 1, '0');
      } else {
        allow(f - 1, to_char(d[f]));
      }
    }
  }

  MatchView view(strs);
  GeneralQuery q{view, allowed, need_zero, n};
  int hit = q.run();
  if (hit < 0) throw ValidationError("eliminate: no witness in the covector set");
  return covs[hit];
}

bool is_acyclic(const Chirotope& chi) {
  int n = chi.ground_size();
  std::uint64_t covered = 0;
  for (const auto& c : cocircuits(chi)) {
    bool nonneg = true;
    for (int e = 1; e <= n && nonneg; ++e)
      if (c[e] == Sign::Minus) nonneg = false;
    if (!nonneg) continue;
    for (int e = 1; e <= n; ++e)
      if (c[e] == Sign::Plus) covered |= std::uint64_t{1} << (e - 1);
  }
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return covered == full;
}

std::vector<int> extreme_points(const Chirotope& chi) {
  if (!is_acyclic(chi))
    throw std::invalid_argument("extreme_points: chirotope is not acyclic");
  int n = chi.ground_size();
  auto cocs = cocircuits(chi);
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<int> out;
  for (int e = 1; e <= n; ++e) {
    std::uint64_t covered = 0;
    for (const auto& c : cocs) {
      if (c[e] != Sign::Zero) continue;
      bool nonneg = true;
      for (int f = 1; f <= n && nonneg; ++f)
        if (c[f] == Sign::Minus) nonneg = false;
      if (!nonneg) continue;
      for (int f = 1; f <= n; ++f)
        if (c[f] == Sign::Plus) covered |= std::uint64_t{1} << (f - 1);
    }
    if (covered == (full & ~(std::uint64_t{1} << (e - 1)))) out.push_back(e);
  }
  return out;
}

bool is_matroid_polytope(const Chirotope& chi) {
  if (!is_acyclic(chi)) return false;
  return static_cast<int>(extreme_points(chi).size()) == chi.ground_size();
}

SimplicityReport simplicity_report(const Chirotope& chi) {
  SimplicityReport rep;
  rep.loops = chi.loops();
  std::uint64_t loop_mask = 0;
  for (int e : rep.loops) loop_mask |= std::uint64_t{1} << (e - 1);

  int n = chi.ground_size();
  auto cocs = cocircuits(chi);
  for (int e = 1; e <= n; ++e) {
    if (loop_mask >> (e - 1) & 1) continue;
    for (int f = e + 1; f <= n; ++f) {
      if (loop_mask >> (f - 1) & 1) continue;
      bool par = true, anti = true;
      for (const auto& c : cocs) {
        if (c[e] != c[f]) par = false;
        if (c[e] != -c[f]) anti = false;
        if (!par && !anti) break;
      }
      if (par) rep.parallel.emplace_back(e, f);
      if (anti) rep.antiparallel.emplace_back(e, f);
    }
  }
  return rep;
}

// --- convex cycle sign patterns ----------------------------------------------

bool cocircuit_pattern_matches(const std::vector<Sign>& seq) {
  // One polarity: first-run, optional zero, opposite run, optional zero,
  // first-run again; runs may be empty and each zero advances one stage.
  auto dfa = [&](Sign first) {
    int state = 0;  // 0: leading run, 1: middle run, 2: trailing run
    for (Sign s : seq) {
      if (s == Sign::Zero) {
        if (++state > 2) return false;
      } else if (s == first) {
        if (state == 1) state = 2;
      } else {
        if (state == 0) state = 1;
        else if (state != 1) return false;
      }
    }
    return true;
  };
  return dfa(Sign::Plus) || dfa(Sign::Minus);
}

bool cocircuit_pattern_check(const Chirotope& chi, const std::vector<int>& cycle,
                             int e) {
  if (chi.rank() != 3)
    throw std::invalid_argument("cocircuit_pattern_check: rank must be 3");
  int n = chi.ground_size();
  int p = static_cast<int>(cycle.size());
  if (p < 3) throw std::invalid_argument("cocircuit_pattern_check: cycle too short");
  std::vector<bool> seen(n + 1, false);
  for (int x : cycle) {
    if (x < 1 || x > n || seen[x])
      throw std::invalid_argument("cocircuit_pattern_check: bad cycle");
    seen[x] = true;
  }
  if (e < 1 || e > n || seen[e])
    throw std::invalid_argument("cocircuit_pattern_check: e must avoid the cycle");

  // The cycle must span consistently oriented triples after one global sign
  // normalization: chi(x_a, x_b, x_c) = eps for all position triples a<b<c.
  Sign eps = Sign::Zero;
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b)
      for (int c = b + 1; c < p; ++c) {
        std::array<int, 3> t{cycle[a], cycle[b], cycle[c]};
        Sign v = chi.value(std::span<const int>(t.data(), 3));
        if (v == Sign::Zero)
          throw std::invalid_argument(
              "cocircuit_pattern_check: cycle triples must be bases");
        if (eps == Sign::Zero) eps = v;
        else if (v != eps)
          throw std::invalid_argument(
              "cocircuit_pattern_check: cycle is not convex-consistent");
      }

  // Edge cocircuit values at e, wrapped so the last entry repeats the first:
  // V_i = eps * chi(x_i, x_{i+1}, .) is + on the rest of the cycle.
  std::vector<Sign> seq(p + 1);
  for (int i = 0; i < p; ++i) {
    std::array<int, 3> t{cycle[i], cycle[(i + 1) % p], e};
    seq[i] = eps * chi.value(std::span<const int>(t.data(), 3));
  }
  seq[p] = seq[0];
  return cocircuit_pattern_matches(seq);
}

bool covector_split_matches(const std::vector<Sign>& seq) {
  bool all_zero = std::all_of(seq.begin(), seq.end(),
                              [](Sign s) { return s == Sign::Zero; });
  if (all_zero) return true;

  int zeros = 0, zero_at = -1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == Sign::Zero) {
      ++zeros;
      zero_at = static_cast<int>(i);
    }
  }
  if (zeros > 1) return false;

  auto two_runs = [](std::span<const Sign> s, Sign a, Sign b) {
    std::size_t i = 0;
    while (i < s.size() && s[i] == a) ++i;
    while (i < s.size() && s[i] == b) ++i;
    return i == s.size();
  };
  auto ok = [&](Sign a, Sign b) {
    std::span<const Sign> s(seq);
    if (zeros == 0) return two_runs(s, a, b);
    auto i = static_cast<std::size_t>(zero_at);
    if (i == 0) return two_runs(s.subspan(1), a, b);
    if (i + 1 == s.size()) return two_runs(s.first(i), a, b);
    // Zero strictly between the runs: constant a before, constant b after.
    for (std::size_t k = 0; k < i; ++k)
      if (s[k] != a) return false;
    for (std::size_t k = i + 1; k < s.size(); ++k)
      if (s[k] != b) return false;
    return true;
  };
  return ok(Sign::Minus, Sign::Plus) || ok(Sign::Plus, Sign::Minus);
}

bool covector_split_check(const Chirotope& chi, const SignVector& v, int x0) {
  if (chi.rank() != 3)
    throw std::invalid_argument("covector_split_check: rank must be 3");
  int n = chi.ground_size();
  if (v.size() != n)
    throw std::invalid_argument("covector_split_check: length mismatch");
  if (x0 < 1 || x0 > n || v[x0] != Sign::Zero)
    throw std::invalid_argument("covector_split_check: v must vanish at x0");

  // The chirotope must be the uniform convex cycle in label order, up to a
  // global sign (which does not move the covector set).
  Sign eps = Sign::Zero;
  for (Sign s : chi.entries()) {
    if (s == Sign::Zero)
      throw std::invalid_argument("covector_split_check: chirotope not uniform");
    if (eps == Sign::Zero) eps = s;
    else if (s != eps)
      throw std::invalid_argument(
          "covector_split_check: chirotope is not alternating in label order");
  }

  // Read the other labels in cycle order starting just after x0; the wrap
  // point sits at x0, so the two arcs the covector cuts stay contiguous.
  std::vector<Sign> seq;
  for (int k = 1; k < n; ++k) seq.push_back(v[(x0 - 1 + k) % n + 1]);
  return covector_split_matches(seq);
}

}  // namespace omt
