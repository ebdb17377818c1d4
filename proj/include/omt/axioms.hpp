// Chirotope axiom checking.
//
// Alternation holds by construction of the Chirotope representation, so the
// checker decides the remaining axioms:
//   full     — nontriviality plus the exhaustive exchange axiom over all
//              tuple pairs (complete but superexponential; size-guarded).
//   screened — nontriviality, basis exchange on the support, and all
//              three-term Grassmann-Plucker sign conditions. Fast, catches
//              everything that matters in practice, but not complete.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "omt/chirotope.hpp"

namespace omt {

enum class AxiomMode { Full, Screened };

struct AxiomOptions {
  // Size guard for full mode; raise explicitly (or via the CLI --cap) to run
  // the exhaustive check on larger instances.
  int max_n_full_rank3 = 12;
  int max_n_full_rank4 = 10;  // applies to every rank >= 4
  std::size_t max_violations = 8;  // stop collecting witnesses after this many
};

struct AxiomViolation {
  std::string axiom;   // "nontriviality", "exchange", "basis-exchange", "three-term"
  std::string detail;  // human-readable witness
};

struct AxiomReport {
  bool passed = true;
  AxiomMode mode = AxiomMode::Full;
  std::vector<AxiomViolation> violations;
};

AxiomReport check_chirotope_axioms(const Chirotope& chi, AxiomMode mode,
                                   const AxiomOptions& options = {});

}  // namespace omt
