#include "omt/axioms.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_set>

#include "omt/combinat.hpp"

namespace omt {

namespace {

std::string tuple_str(std::span<const int> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

void add_violation(AxiomReport& report, const AxiomOptions& options,
                   std::string axiom, std::string detail) {
  report.passed = false;
  if (report.violations.size() < options.max_violations)
    report.violations.push_back({std::move(axiom), std::move(detail)});
}

// Exhaustive exchange check. For tuple pairs i = (i1, i2..ir) and
// j = (j1..jr) the axiom demands: if every exchange product
//   chi(j_s, i2..ir) * chi(j1.., i1 at slot s, ..jr) is >= 0,
// then chi(i) * chi(j) >= 0. Scanning all ordered tuples is wasteful:
// permuting i2..ir or j by a parity-e rearrangement scales every exchange
// product and the conclusion product by e together, so the scan may fix
// i2..ir and j sorted and flag BOTH polarities:
//   (all products >= 0 and conclusion < 0)  or
//   (all products <= 0 and conclusion > 0).
// Each flagged pair maps back to a literal violation by one transposition
// (inside i2..ir when r >= 3, inside j when r == 2), and conversely every
// literal violation sorts to a flagged pair. Tuples with chi(i) = 0 or
// chi(j) = 0 can never violate (the conclusion would be 0), so both sides
// range over bases only.
void check_exchange_full(const Chirotope& chi, AxiomReport& report,
                         const AxiomOptions& options) {
  int r = chi.rank();
  if (r < 2) return;  // with i2..ir empty the conclusion equals the product
  auto bases = chi.bases();

  struct ISide {
    int pivot;                 // i1
    std::array<int, 32> rest;  // i2..ir, sorted
    Sign value;                // chi(i1, i2..ir)
  };
  std::vector<ISide> lefts;
  lefts.reserve(bases.size() * r);
  for (const auto& b : bases) {
    Sign v = chi.sorted_value(b);
    for (int t = 0; t < r; ++t) {
      ISide side;
      side.pivot = b[t];
      for (int k = 0, w = 0; k < r; ++k)
        if (k != t) side.rest[w++] = b[k];
      side.value = t % 2 == 0 ? v : -v;  // move slot t to the front
      lefts.push_back(side);
    }
  }

  // Per right-side basis, the r "drop one slot" variants, precomputed.
  std::array<int, 32> buf;
  for (const auto& bj : bases) {
    Sign vj = chi.sorted_value(bj);
    std::array<std::array<int, 32>, 32> drop;
    for (int s = 0; s < r; ++s)
      for (int k = 0, w = 0; k < r; ++k)
        if (k != s) drop[s][w++] = bj[k];

    for (const ISide& left : lefts) {
      Sign concl = left.value * vj;
      // Conclusion < 0 needs a negative exchange product somewhere;
      // conclusion > 0 (the mirrored polarity) needs a positive one.
      Sign need = concl == Sign::Plus ? Sign::Plus : Sign::Minus;
      bool satisfied = false;
      for (int s = 0; s < r; ++s) {
        // first factor: chi(bj[s], i2..ir)
        buf[0] = bj[s];
        std::copy_n(left.rest.begin(), r - 1, buf.begin() + 1);
        Sign f1 = chi.value(std::span<const int>(buf.data(), r));
        if (f1 == Sign::Zero) continue;
        // second factor: chi(bj with slot s replaced by i1)
        buf[0] = left.pivot;
        std::copy_n(drop[s].begin(), r - 1, buf.begin() + 1);
        Sign f2 = chi.value(std::span<const int>(buf.data(), r));
        if (s % 2 == 1) f2 = -f2;  // restore i1 to slot s
        if (f1 * f2 == need) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;

      // Normalize the witness to the literal polarity (products >= 0,
      // conclusion < 0) before reporting.
      std::array<int, 32> wi, wj;
      wi[0] = left.pivot;
      std::copy_n(left.rest.begin(), r - 1, wi.begin() + 1);
      std::copy_n(bj.begin(), r, wj.begin());
      if (concl == Sign::Plus) {
        if (r >= 3)
          std::swap(wi[1], wi[2]);
        else
          std::swap(wj[0], wj[1]);
      }
      add_violation(report, options, "exchange",
                    "tuples i=" + tuple_str({wi.data(), std::size_t(r)}) +
                        ", j=" + tuple_str({wj.data(), std::size_t(r)}) +
                        ": every exchange product is >= 0 but chi(i)*chi(j) < 0");
      if (report.violations.size() >= options.max_violations) return;
    }
  }
}

void check_basis_exchange(const Chirotope& chi, AxiomReport& report,
                          const AxiomOptions& options) {
  const auto& masks = chi.basis_masks();
  std::unordered_set<std::uint64_t> basis_set(masks.begin(), masks.end());
  int n = chi.ground_size();
  for (std::uint64_t b1 : masks) {
    for (std::uint64_t b2 : masks) {
      if (b1 == b2) continue;
      std::uint64_t only1 = b1 & ~b2, only2 = b2 & ~b1;
      for (int x = 0; x < n; ++x) {
        if (!(only1 >> x & 1)) continue;
        bool found = false;
        for (int y = 0; y < n && !found; ++y) {
          if (!(only2 >> y & 1)) continue;
          if (basis_set.count((b1 & ~(std::uint64_t{1} << x)) |
                              (std::uint64_t{1} << y)))
            found = true;
        }
        if (!found) {
          add_violation(report, options, "basis-exchange",
                        "bases' supports violate exchange at element " +
                            std::to_string(x + 1));
          if (report.violations.size() >= options.max_violations) return;
        }
      }
    }
  }
}

// Three-term condition: for every sorted (r-2)-subset L and a<b<c<d disjoint
// from it, the signs {chi(L,a,b)chi(L,c,d), -chi(L,a,c)chi(L,b,d),
// chi(L,a,d)chi(L,b,c)} must be all zero or contain both + and -.
void check_three_term(const Chirotope& chi, AxiomReport& report,
                      const AxiomOptions& options) {
  int r = chi.rank(), n = chi.ground_size();
  if (r < 2 || n - r + 2 < 4) return;

  std::array<int, 32> buf;
  auto val = [&](const std::vector<int>& lambda, int x, int y) {
    for (int i = 0; i + 2 < r; ++i) buf[i] = lambda[i];
    buf[r - 2] = x;
    buf[r - 1] = y;
    return chi.value(std::span<const int>(buf.data(), r));
  };

  std::vector<int> lambda = r == 2 ? std::vector<int>{} : first_subset(r - 2);
  bool more = true;
  while (more) {
    std::uint64_t lm = 0;
    for (int e : lambda) lm |= std::uint64_t{1} << (e - 1);
    std::vector<int> free;
    for (int e = 1; e <= n; ++e)
      if (!(lm >> (e - 1) & 1)) free.push_back(e);

    int f = static_cast<int>(free.size());
    for (int ia = 0; ia < f; ++ia)
      for (int ib = ia + 1; ib < f; ++ib)
        for (int ic = ib + 1; ic < f; ++ic)
          for (int id = ic + 1; id < f; ++id) {
            int a = free[ia], b = free[ib], c = free[ic], d = free[id];
            Sign t1 = val(lambda, a, b) * val(lambda, c, d);
            Sign t2 = -(val(lambda, a, c) * val(lambda, b, d));
            Sign t3 = val(lambda, a, d) * val(lambda, b, c);
            bool has_plus = t1 == Sign::Plus || t2 == Sign::Plus || t3 == Sign::Plus;
            bool has_minus = t1 == Sign::Minus || t2 == Sign::Minus || t3 == Sign::Minus;
            bool all_zero = t1 == Sign::Zero && t2 == Sign::Zero && t3 == Sign::Zero;
            if (!(all_zero || (has_plus && has_minus))) {
              add_violation(
                  report, options, "three-term",
                  "lambda=" + tuple_str(lambda) + ", elements (" +
                      std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + "," + std::to_string(d) +
                      "): three-term sign condition fails");
              if (report.violations.size() >= options.max_violations) return;
            }
          }

    more = !lambda.empty() && next_subset(lambda, n);
    if (lambda.empty()) more = false;
  }
}

}  // namespace

AxiomReport check_chirotope_axioms(const Chirotope& chi, AxiomMode mode,
                                   const AxiomOptions& options) {
  AxiomReport report;
  report.mode = mode;

  if (chi.is_zero_map()) {
    add_violation(report, options, "nontriviality", "all values are zero");
    return report;
  }

  if (mode == AxiomMode::Full) {
    int r = chi.rank(), n = chi.ground_size();
    int cap = r == 3 ? options.max_n_full_rank3
                     : (r >= 4 ? options.max_n_full_rank4 : n);
    if (n > cap)
      throw std::invalid_argument(
          "full axiom check refused: n=" + std::to_string(n) +
          " exceeds the configured cap " + std::to_string(cap) +
          " for rank " + std::to_string(r) + "; raise the cap or use screened mode");
    check_exchange_full(chi, report, options);
  } else {
    check_basis_exchange(chi, report, options);
    if (report.violations.size() < options.max_violations)
      check_three_term(chi, report, options);
  }
  return report;
}

}  // namespace omt
