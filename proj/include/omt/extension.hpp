// Single-element extensions driven by cocircuit signatures. The headline
// construction: for a matroid polytope, the majority rule l(c) =
// sign(#plus(c) - #minus(c)) is a localization, and the resulting extension
// keeps every rotation (extended to fix the new element) and admits a
// rank-lowering contraction that keeps them too.
#pragma once

#include <vector>

#include "omt/chirotope.hpp"
#include "omt/sign_vector.hpp"

namespace omt {

// A sign for every cocircuit. Valid signatures are antisymmetric:
// l(-c) = -l(c).
struct CocircuitSignature {
  std::vector<SignVector> cocircuits;  // sorted canonical list
  std::vector<Sign> values;            // aligned with cocircuits
  // Exact-match lookup; an unknown cocircuit is a hard error.
  Sign value_for(const SignVector& c) const;
};

// The majority signature over cocircuits(chi). Requires a matroid polytope.
CocircuitSignature majority_localization(const Chirotope& chi);

// Extension by one element, labeled n+1: chi'(y, n+1) = l(c_y) for every
// (r-1)-tuple y spanning a corank-1 flat (c_y(e) = chi(y, e)), zero for
// rank-deficient tuples, and chi' = chi on old tuples. The result is
// validated with the full axiom check; failure means l was not a
// localization and throws ValidationError with the witness.
Chirotope extend(const Chirotope& chi, const CocircuitSignature& l);

struct FixedPointExtension {
  Chirotope extended;
  int new_element = 0;
  std::size_t rotations_checked = 0;  // rotations of chi verified to survive
};

// Majority extension of a matroid polytope. Verifies that every rotation of
// chi, extended to fix n+1, is a rotation of the extension; a counterexample
// throws ValidationError.
FixedPointExtension fixed_point_extension(const Chirotope& chi);

// contract(fixed_point_extension(chi), n+1): drops the rank by one while
// keeping labels 1..n. Every rotation of chi is re-verified as a rotation of
// the contraction.
Chirotope contract_at_extension(const Chirotope& chi);

}  // namespace omt
