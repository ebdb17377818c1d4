// Cocircuits, covector enumeration, covector axioms, elimination, and the
// convex-position sign-pattern validators.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "omt/chirotope.hpp"
#include "omt/sign_vector.hpp"

namespace omt {

// Both signings of every cocircuit, in canonical (byte) order.
std::vector<SignVector> cocircuits(const Chirotope& chi);

// All covectors (compositions of cocircuits, plus zero), canonical order.
// Throws ValidationError if the closure exceeds size_cap.
std::vector<SignVector> covectors(const Chirotope& chi,
                                  std::size_t size_cap = 2'000'000);

struct CovectorViolation {
  std::string axiom;  // "V0", "V1", "V2", "V3"
  std::string detail;
};

struct CovectorReport {
  bool passed = true;
  std::vector<CovectorViolation> violations;
};

// V0: zero present. V1: closed under negation. V2: closed under composition
// (all ordered pairs). V3: for every pair and every separator element e some
// Z in V has Z(e) = 0 and Z = X∘Y outside the separator.
CovectorReport check_covector_axioms(const std::vector<SignVector>& covs,
                                     std::size_t max_violations = 8);

// Elimination witness, lexicographically smallest in canonical byte order.
// Plain mode: Z(e) = 0, Z = X∘Y outside S(X,Y), anything inside.
// Conformal mode: the witness is additionally required to conform to Y on U
// (default U = S(X,Y)) and to vanish somewhere on U; e is ignored there.
// Throws ValidationError when no witness exists.
SignVector eliminate(const std::vector<SignVector>& covs, const SignVector& x,
                     const SignVector& y, int e, bool conformal = false,
                     const std::vector<int>& u = {});

bool is_acyclic(const Chirotope& chi);
std::vector<int> extreme_points(const Chirotope& chi);  // requires acyclic
bool is_matroid_polytope(const Chirotope& chi);

struct SimplicityReport {
  std::vector<int> loops;
  std::vector<std::pair<int, int>> parallel;      // e < f, same sign everywhere
  std::vector<std::pair<int, int>> antiparallel;  // e < f, opposite everywhere
  bool simple() const {
    return loops.empty() && parallel.empty() && antiparallel.empty();
  }
};

SimplicityReport simplicity_report(const Chirotope& chi);

// Sign sequence along the edge cocircuits of a convex cycle: for a cycle
// X = (x_0..x_{p-1}) spanning positively oriented triples, the values
// V_0(e), ..., V_{p-1}(e), V_0(e) must form at most one -run and one +run
// with single zeros allowed only at the run boundaries. The raw matcher is
// exposed for direct sequence tests.
bool cocircuit_pattern_matches(const std::vector<Sign>& seq);
bool cocircuit_pattern_check(const Chirotope& chi, const std::vector<int>& cycle,
                             int e);

// For a rank-3 uniform convex cycle chirotope (all sorted triples share one
// nonzero sign) and a covector v vanishing at x0: the remaining values in
// label order must be all zero, or two constant runs (-then+ or +then-) with
// at most one zero, placed leading, between the runs, or trailing.
bool covector_split_matches(const std::vector<Sign>& seq);
bool covector_split_check(const Chirotope& chi, const SignVector& v, int x0);

}  // namespace omt
