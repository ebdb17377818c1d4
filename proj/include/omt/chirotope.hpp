// Chirotope: an alternating sign map on r-tuples from a ground set {1..n},
// stored as one Sign per sorted r-subset in lexicographic order. Values on
// arbitrary tuples are derived through the alternating rule (permutation
// parity, zero on repeated entries), so alternation holds by construction.
//
// Matroid queries (bases, rank, closure) read the support of the map; they
// are meaningful once the axioms hold, which check_chirotope_axioms decides.
//
// Text format, round-tripped byte for byte:
//   line 1: "r n"
//   line 2: C(n,r) characters over {+,-,0}, lexicographic subset order
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "omt/combinat.hpp"
#include "omt/permutation.hpp"
#include "omt/sign.hpp"

namespace omt {

class Chirotope {
 public:
  Chirotope(int r, int n, std::vector<Sign> signs);

  // The alternating (uniform) chirotope A_{r,n}: +1 on every sorted r-tuple.
  static Chirotope alternating(int r, int n);

  int rank() const { return r_; }
  int ground_size() const { return n_; }
  const std::vector<Sign>& entries() const { return signs_; }

  // Value on a strictly increasing r-tuple.
  Sign sorted_value(std::span<const int> sorted) const;
  // Value on an arbitrary r-tuple (0 on repeats, parity otherwise).
  Sign value(std::span<const int> tuple) const;

  bool is_zero_map() const;

  // --- matroid layer -------------------------------------------------------
  std::vector<std::vector<int>> bases() const;
  const std::vector<std::uint64_t>& basis_masks() const;  // bit e-1 <=> element e
  int rank_of(std::span<const int> subset) const;
  std::vector<int> flat_closure(std::span<const int> subset) const;
  std::vector<int> loops() const;

  // --- transforms ----------------------------------------------------------
  Chirotope reorient(std::span<const int> subset) const;
  Chirotope relabel(const Permutation& p) const;
  Chirotope restrict_to(std::span<const int> subset) const;
  Chirotope contract(int e) const;
  Chirotope dual() const;
  Chirotope negated() const;

  // Representative of {chi, -chi} whose first nonzero entry is '+'.
  Chirotope canonical_rep() const;
  bool same_up_to_sign(const Chirotope& other) const;

  std::string to_text() const;
  static Chirotope from_text(const std::string& text);

  // Compares the maps themselves; the lazy basis-mask cache must not
  // participate (two equal chirotopes may differ in what they have cached).
  friend bool operator==(const Chirotope& a, const Chirotope& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.signs_ == b.signs_;
  }

 private:
  int r_ = 0;
  int n_ = 0;
  std::vector<Sign> signs_;
  mutable std::vector<std::uint64_t> basis_masks_;  // lazy cache
  mutable bool masks_built_ = false;
};

}  // namespace omt
