// Symmetries of a chirotope: permutations with chi∘sigma = chi (rotations)
// or chi∘sigma = -chi (reflections), found by pruned backtracking over
// images; group recognition against the small families C_n, D_2n, A4, S4,
// A5; and the structural checks built on top (fixed-set rank, rigidity,
// cyclicity, maximal cyclic intersections, orbit flat orderings).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omt/chirotope.hpp"
#include "omt/permutation.hpp"

namespace omt {

enum class SymmetryKind { Rotation, Reflection, MOnly, None };

// chi∘p == chi -> Rotation; == -chi -> Reflection; same zero pattern but
// mixed signs -> MOnly; zero pattern broken -> None.
SymmetryKind classify_permutation(const Chirotope& chi, const Permutation& p);

// Zero-pattern preservation only (the underlying matroid automorphism test).
bool verify_m_symmetry(const Chirotope& chi, const Permutation& p);

struct SymmetryGroup {
  std::vector<Permutation> elements;  // canonical (lex image) order, id first
  std::vector<SymmetryKind> kinds;    // aligned; Rotation or Reflection only
  std::vector<Permutation> rotations() const {
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (kinds[i] == SymmetryKind::Rotation) out.push_back(elements[i]);
    return out;
  }
};

struct SymmetryOptions {
  std::uint64_t max_nodes = 200'000'000;  // backtracking node guard
};

SymmetryGroup symmetry_group(const Chirotope& chi, const SymmetryOptions& = {});

struct GroupDescriptor {
  std::string name;  // "C_k", "D_2k", "A4", "S4", "A5", "other"
  int parameter = 0;  // k for C_k; k for D_2k (order 2k); 0 otherwise
  std::size_t order = 0;
  std::map<int, int> element_orders;    // order -> count
  std::vector<Permutation> generators;  // witnesses; they generate the group
};

// Recognizes the closure of the given elements. Witness semantics: C_k gets
// one generator of order k; D_2k gets [g, h] with |g| = k, h an involution
// outside <g> inverting g; the rest get a greedy small generating set.
GroupDescriptor identify_group(const std::vector<Permutation>& elements);

struct Orbit {
  std::vector<int> elements;  // sorted
  int rank = 0;
};

std::vector<Orbit> orbits(const std::vector<Permutation>& group,
                          const Chirotope& chi);

struct FixedRankResult {
  std::vector<int> fixed_elements;
  int fixed_rank = 0;
  bool bound_holds = false;  // fixed_rank <= rank - 2
};

// For a loopless chirotope and a nontrivial rotation (it moves some element
// to a non-parallel image), the fixed set must have rank <= r-2.
FixedRankResult fixed_rank_check(const Chirotope& chi, const Permutation& p);

enum class RigidityVerdict { NotApplicable, Holds, Violated };

// Two rotations agreeing on a subset of rank >= r-1 must coincide.
RigidityVerdict rigidity_check(const Chirotope& chi, const Permutation& p,
                               const Permutation& q, const std::vector<int>& x);

struct CyclicityResult {
  bool group_cyclic = false;
  int max_orbit_rank = 0;
  bool criterion_consistent = false;  // cyclic <=> all orbit ranks <= 3
  std::string group_name;
};

// Rank-4, simple, acyclic; g must be a rotation subgroup. Checks the
// equivalence "subgroup cyclic <=> no orbit spans rank 4".
CyclicityResult cyclicity_criterion(const Chirotope& chi,
                                    const std::vector<Permutation>& g);

struct MaxCyclicReport {
  std::size_t count = 0;  // distinct maximal cyclic subgroups of the rotations
  bool all_intersections_trivial = false;
  std::vector<std::pair<int, int>> offending;  // indices of bad pairs
};

MaxCyclicReport maximal_cyclic_intersection_check(const Chirotope& chi);

struct FlatOrderingsResult {
  std::vector<std::vector<int>> flats;  // closures of rank-3 orbits, deduped
  bool degenerate = false;              // fewer than two flats: nothing to order
  std::vector<std::vector<int>> orderings;  // valid stacking orders (flat indices)
  bool lemma_holds = false;  // exactly two orderings, mutually reversed
};

// For a cyclic rotation subgroup of order > 2 on a rank-4 simple acyclic
// chirotope: orders the rank-3 orbit closures by covectors that vanish on
// one flat and separate the others.
FlatOrderingsResult flat_orderings(const Chirotope& chi,
                                   const std::vector<Permutation>& g);

struct Rank4Classification {
  GroupDescriptor rotation_group;
  bool in_allowed_families = false;  // C_k, D_2k, A4, S4, A5
  std::size_t full_group_order = 0;
  std::size_t reflection_count = 0;
};

Rank4Classification classify_rank4(const Chirotope& chi);

}  // namespace omt
