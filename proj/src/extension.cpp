#include "omt/extension.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <utility>

#include "omt/axioms.hpp"
#include "omt/combinat.hpp"
#include "omt/error.hpp"
#include "omt/faces.hpp"
#include "omt/symmetry.hpp"

namespace omt {

Sign CocircuitSignature::value_for(const SignVector& c) const {
  auto it = std::lower_bound(cocircuits.begin(), cocircuits.end(), c);
  if (it == cocircuits.end() || !(*it == c))
    throw ValidationError("unknown cocircuit in signature lookup: " + c.to_string());
  return values[static_cast<std::size_t>(it - cocircuits.begin())];
}

CocircuitSignature majority_localization(const Chirotope& chi) {
  if (!is_matroid_polytope(chi))
    throw std::invalid_argument("majority_localization requires a matroid polytope");
  CocircuitSignature sig;
  sig.cocircuits = cocircuits(chi);
  sig.values.reserve(sig.cocircuits.size());
  for (const auto& c : sig.cocircuits) {
    int balance = 0;
    for (int e = 1; e <= c.size(); ++e) {
      if (c[e] == Sign::Plus) ++balance;
      else if (c[e] == Sign::Minus) --balance;
    }
    sig.values.push_back(sign_of_int(balance));
  }
  return sig;
}

Chirotope extend(const Chirotope& chi, const CocircuitSignature& l) {
  int r = chi.rank(), n = chi.ground_size();
  if (r < 1) throw std::invalid_argument("extend: rank must be at least 1");
  if (n + 1 > kMaxGroundSize)
    throw std::invalid_argument("extend: ground set too large");
  {
    auto expect = cocircuits(chi);
    if (l.cocircuits != expect || l.values.size() != expect.size())
      throw std::invalid_argument("extend: signature does not cover the cocircuits of the input");
    for (std::size_t i = 0; i < expect.size(); ++i)
      if (l.value_for(expect[i].negated()) != -l.values[i])
        throw std::invalid_argument("extend: signature is not antisymmetric");
  }

  std::vector<Sign> out(binom(n + 1, r), Sign::Zero);
  std::vector<int> s = first_subset(r);
  std::array<int, 32> tup;
  do {
    std::size_t idx = subset_rank(s, n + 1);
    if (s.back() <= n) {
      out[idx] = chi.sorted_value(s);
    } else {
      // s = (y, n+1). A spanning y has a genuine cocircuit c_y; a
      // rank-deficient y gets value zero.
      std::span<const int> y(s.data(), static_cast<std::size_t>(r - 1));
      if (chi.rank_of(y) == r - 1) {
        SignVector c(n);
        for (int i = 0; i < r - 1; ++i) tup[i] = s[i];
        for (int e = 1; e <= n; ++e) {
          tup[r - 1] = e;
          c.set(e, chi.value(std::span<const int>(tup.data(), static_cast<std::size_t>(r))));
        }
        out[idx] = l.value_for(c);
      }
    }
  } while (next_subset(s, n + 1));

  Chirotope ext(r, n + 1, std::move(out));
  AxiomOptions opts;
  opts.max_n_full_rank3 = n + 1;
  opts.max_n_full_rank4 = n + 1;
  AxiomReport report = check_chirotope_axioms(ext, AxiomMode::Full, opts);
  if (!report.passed) {
    std::string msg = "extension failed axiom validation";
    if (!report.violations.empty())
      msg += " (" + report.violations.front().axiom + ": " +
             report.violations.front().detail + ")";
    throw ValidationError(msg);
  }
  return ext;
}

namespace {

Permutation fix_last(const Permutation& p, int n_plus_1) {
  std::vector<int> img(static_cast<std::size_t>(n_plus_1));
  for (int i = 1; i < n_plus_1; ++i) img[i - 1] = p(i);
  img[n_plus_1 - 1] = n_plus_1;
  return Permutation(std::move(img));
}

}  // namespace

FixedPointExtension fixed_point_extension(const Chirotope& chi) {
  if (!is_matroid_polytope(chi))
    throw std::invalid_argument("fixed_point_extension requires a matroid polytope");
  int ne = chi.ground_size() + 1;
  FixedPointExtension res{extend(chi, majority_localization(chi)), ne, 0};
  for (const auto& p : symmetry_group(chi).rotations()) {
    if (classify_permutation(res.extended, fix_last(p, ne)) != SymmetryKind::Rotation)
      throw ValidationError("extension does not preserve the rotation " + p.to_string());
    ++res.rotations_checked;
  }
  return res;
}

Chirotope contract_at_extension(const Chirotope& chi) {
  FixedPointExtension fpe = fixed_point_extension(chi);
  Chirotope out = fpe.extended.contract(fpe.new_element);
  for (const auto& p : symmetry_group(chi).rotations()) {
    if (classify_permutation(out, p) != SymmetryKind::Rotation)
      throw ValidationError("contraction does not preserve the rotation " + p.to_string());
  }
  return out;
}

}  // namespace omt
