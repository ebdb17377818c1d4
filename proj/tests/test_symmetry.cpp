// Symmetry machinery: classification of single permutations, group search,
// group recognition, orbits, and the rank-4 structure theorems.
#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "omt/combinat.hpp"
#include "omt/error.hpp"
#include "omt/faces.hpp"
#include "omt/geometry.hpp"
#include "omt/symmetry.hpp"

using namespace omt;

namespace {

Permutation perm(std::vector<int> images) { return Permutation(std::move(images)); }

// <p>, as an explicit closed list including the identity.
std::vector<Permutation> cyclic_closure(const Permutation& p) {
  std::vector<Permutation> out{Permutation::identity(p.size())};
  for (Permutation q = p; !q.is_identity(); q = p * q) out.push_back(q);
  return out;
}

// First rotation of the given order, in the canonical element order.
Permutation first_of_order(const std::vector<Permutation>& rotations, int k) {
  for (const auto& p : rotations)
    if (p.order() == k) return p;
  throw std::runtime_error("no element of the requested order");
}

// The cube rotation about the main diagonal through (0,0,0) and (1,1,1):
// coordinates cycle (x,y,z) -> (z,x,y), so labels cycle (2 5 3)(4 6 7).
const std::vector<int> kCubeDiagonal{1, 5, 2, 6, 3, 7, 4, 8};
// Quarter turn about the z axis, (x,y) -> (y,1-x): (1 3 7 5)(2 4 8 6).
const std::vector<int> kCubeFace{3, 4, 7, 8, 1, 2, 5, 6};

}  // namespace

TEST_SUITE_BEGIN("symmetry");

TEST_CASE("classifying single permutations on alternating chirotopes") {
  const Chirotope& a33 = corpus::alternating(3, 3);
  CHECK(classify_permutation(a33, Permutation::identity(3)) == SymmetryKind::Rotation);
  // The 3-cycle permutes the only basis evenly, a transposition oddly.
  CHECK(classify_permutation(a33, perm({2, 3, 1})) == SymmetryKind::Rotation);
  CHECK(classify_permutation(a33, perm({2, 1, 3})) == SymmetryKind::Reflection);

  const Chirotope& a35 = corpus::alternating(3, 5);
  CHECK(classify_permutation(a35, perm({2, 3, 4, 5, 1})) == SymmetryKind::Rotation);
  CHECK(classify_permutation(a35, perm({5, 4, 3, 2, 1})) == SymmetryKind::Reflection);
  // Swapping two points of a uniform chirotope keeps every basis a basis but
  // flips only the signs of tuples containing exactly one of them.
  CHECK(classify_permutation(a35, perm({2, 1, 3, 4, 5})) == SymmetryKind::MOnly);

  CHECK_THROWS_AS(classify_permutation(a33, perm({2, 1})), std::invalid_argument);
}

TEST_CASE("the prism example: sigma preserves bases but not signs") {
  const Chirotope& chi = corpus::example("paper8");
  Permutation sigma = perm({3, 4, 5, 6, 1, 2, 7, 8});

  CHECK(verify_m_symmetry(chi, sigma));
  CHECK(classify_permutation(chi, sigma) == SymmetryKind::MOnly);

  // Independent support check: collect the non-bases directly from values
  // and verify sigma permutes that set.
  std::set<std::vector<int>> nonbases;
  {
    std::vector<int> s{1, 2, 3, 4};
    do {
      if (chi.sorted_value(s) == Sign::Zero) nonbases.insert(s);
    } while (next_subset(s, 8));
  }
  CHECK(nonbases == std::set<std::vector<int>>{
                        {1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}});
  for (const auto& nb : nonbases) {
    std::vector<int> img;
    for (int e : nb) img.push_back(sigma(e));
    std::sort(img.begin(), img.end());
    CHECK(nonbases.count(img) == 1);
  }

  // A transposition inside a vertical pair fixes each non-basis setwise; a
  // transposition across pairs sends {1,2,5,6} to a basis.
  CHECK(verify_m_symmetry(chi, perm({2, 1, 3, 4, 5, 6, 7, 8})));
  CHECK_FALSE(verify_m_symmetry(chi, perm({1, 3, 2, 4, 5, 6, 7, 8})));
  CHECK(classify_permutation(chi, perm({1, 3, 2, 4, 5, 6, 7, 8})) ==
        SymmetryKind::None);
}

TEST_CASE("symmetry groups of alternating chirotopes are dihedral") {
  for (int n = 3; n <= 5; ++n) {
    CAPTURE(n);
    const Chirotope& chi = corpus::alternating(3, n);
    SymmetryGroup g = symmetry_group(chi);
    CHECK(g.elements.size() == 2 * static_cast<std::size_t>(n));
    CHECK(g.rotations().size() == static_cast<std::size_t>(n));
    CHECK(g.elements.front().is_identity());

    // All cyclic shifts are rotations.
    std::vector<int> shift(n);
    for (int i = 0; i < n; ++i) shift[i] = i % n + 1;
    Permutation s = perm(shift);
    auto rots = g.rotations();
    CHECK(std::count(rots.begin(), rots.end(), s) == 1);

    GroupDescriptor desc = identify_group(rots);
    CHECK(desc.name == "C_" + std::to_string(n));
    CHECK(desc.parameter == n);

    // Closure with the sign rule: Rot*Rot = Rot, Refl*Refl = Rot, mixed = Refl.
    std::set<Permutation> members(g.elements.begin(), g.elements.end());
    std::map<Permutation, SymmetryKind> kind;
    for (std::size_t i = 0; i < g.elements.size(); ++i)
      kind[g.elements[i]] = g.kinds[i];
    for (const auto& a : g.elements) {
      for (const auto& b : g.elements) {
        Permutation ab = a * b;
        REQUIRE(members.count(ab) == 1);
        bool flip = (kind[a] == SymmetryKind::Reflection) !=
                    (kind[b] == SymmetryKind::Reflection);
        CHECK(kind[ab] == (flip ? SymmetryKind::Reflection : SymmetryKind::Rotation));
      }
    }
  }
}

TEST_CASE("the prism example has exactly one symmetry besides the identity") {
  SymmetryGroup g = symmetry_group(corpus::example("paper8"));
  REQUIRE(g.elements.size() == 2);
  CHECK(g.elements[0].is_identity());
  // The central flip: each prism vertex goes to the opposite one and the two
  // joint points trade places. It lands on chi with sign +1.
  CHECK(g.elements[1] == perm({6, 5, 4, 3, 2, 1, 8, 7}));
  CHECK(g.kinds[0] == SymmetryKind::Rotation);
  CHECK(g.kinds[1] == SymmetryKind::Rotation);
}

TEST_CASE("relabeling conjugates the symmetry group") {
  const Chirotope& chi = corpus::alternating(3, 4);
  Permutation p = perm({2, 4, 1, 3});
  SymmetryGroup before = symmetry_group(chi);
  SymmetryGroup after = symmetry_group(chi.relabel(p));

  std::set<Permutation> expect;
  for (const auto& g : before.elements) expect.insert(p * g * p.inverse());
  std::set<Permutation> got(after.elements.begin(), after.elements.end());
  CHECK(got == expect);
}

TEST_CASE("group search guards") {
  SymmetryOptions tiny;
  tiny.max_nodes = 1;
  CHECK_THROWS_AS(symmetry_group(corpus::example("cube"), tiny), ValidationError);

  Chirotope zero(2, 4, std::vector<Sign>(6, Sign::Zero));
  CHECK_THROWS_AS(symmetry_group(zero), std::invalid_argument);
}

TEST_CASE("identify_group recognizes the small families") {
  SUBCASE("trivial and cyclic") {
    GroupDescriptor triv = identify_group({Permutation::identity(4)});
    CHECK(triv.name == "C_1");
    CHECK(triv.order == 1);

    GroupDescriptor c6 = identify_group({perm({2, 3, 4, 5, 6, 1})});
    CHECK(c6.name == "C_6");
    CHECK(c6.parameter == 6);
    CHECK(c6.order == 6);
    CHECK(c6.element_orders == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
    REQUIRE(c6.generators.size() == 1);
    CHECK(c6.generators[0].order() == 6);
  }

  SUBCASE("dihedral, including the Klein group as the order-4 case") {
    GroupDescriptor klein = identify_group(
        {perm({2, 1, 4, 3}), perm({3, 4, 1, 2})});
    CHECK(klein.name == "D_4");
    CHECK(klein.parameter == 2);
    CHECK(klein.order == 4);

    GroupDescriptor d8 = identify_group({perm({2, 3, 4, 1}), perm({3, 2, 1, 4})});
    CHECK(d8.name == "D_8");
    CHECK(d8.parameter == 4);
    CHECK(d8.order == 8);
    REQUIRE(d8.generators.size() == 2);
    CHECK(d8.generators[0].order() == 4);
    CHECK(d8.generators[1].order() == 2);
    // Witness relation: h g h^-1 = g^-1.
    CHECK(d8.generators[1] * d8.generators[0] * d8.generators[1].inverse() ==
          d8.generators[0].inverse());
  }

  SUBCASE("the exceptional rotation groups") {
    GroupDescriptor a4 = identify_group({perm({2, 3, 1, 4}), perm({2, 1, 4, 3})});
    CHECK(a4.name == "A4");
    CHECK(a4.order == 12);
    CHECK(a4.element_orders == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}});

    GroupDescriptor s4 = identify_group({perm({2, 3, 4, 1}), perm({2, 1, 3, 4})});
    CHECK(s4.name == "S4");
    CHECK(s4.order == 24);

    GroupDescriptor a5 =
        identify_group({perm({2, 3, 4, 5, 1}), perm({2, 3, 1, 4, 5})});
    CHECK(a5.name == "A5");
    CHECK(a5.order == 60);
    CHECK(a5.element_orders ==
          std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
  }

  SUBCASE("groups outside the families are reported as other") {
    // C2 x C4: abelian with no element of order 8, and no inverting
    // involution makes the dihedral witness impossible.
    GroupDescriptor c2c4 = identify_group(
        {perm({2, 3, 4, 1, 5, 6}), perm({1, 2, 3, 4, 6, 5})});
    CHECK(c2c4.name == "other");
    CHECK(c2c4.order == 8);
    CHECK(c2c4.element_orders == std::map<int, int>{{1, 1}, {2, 3}, {4, 4}});

    // The quaternion group acting on itself by right multiplication: a
    // single involution, so again no dihedral witness.
    GroupDescriptor q8 = identify_group(
        {perm({3, 4, 2, 1, 8, 7, 5, 6}), perm({5, 6, 7, 8, 2, 1, 4, 3})});
    CHECK(q8.name == "other");
    CHECK(q8.order == 8);
    CHECK(q8.element_orders == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});
  }

  SUBCASE("witnesses generate and naming is conjugation-invariant") {
    std::vector<GroupDescriptor> descs{
        identify_group({perm({2, 3, 4, 1}), perm({3, 2, 1, 4})}),
        identify_group({perm({2, 3, 1, 4}), perm({2, 1, 4, 3})}),
        identify_group({perm({2, 3, 4, 1, 6, 5})})};
    for (const auto& d : descs) {
      GroupDescriptor regen = identify_group(d.generators);
      CHECK(regen.order == d.order);
      CHECK(regen.name == d.name);
    }

    Permutation c = perm({4, 1, 3, 2});
    std::vector<Permutation> conj;
    for (const auto& g :
         std::vector<Permutation>{perm({2, 3, 4, 1}), perm({3, 2, 1, 4})})
      conj.push_back(c * g * c.inverse());
    GroupDescriptor d8c = identify_group(conj);
    CHECK(d8c.name == "D_8");
    CHECK(d8c.order == 8);
  }

  SUBCASE("empty input is rejected") {
    CHECK_THROWS_AS(identify_group({}), std::invalid_argument);
  }
}

TEST_CASE("orbits of cube rotations") {
  const Chirotope& cube = corpus::example("cube");
  Permutation diag = perm(kCubeDiagonal);
  REQUIRE(classify_permutation(cube, diag) == SymmetryKind::Rotation);

  auto orbs = orbits(cyclic_closure(diag), cube);
  REQUIRE(orbs.size() == 4);
  std::vector<std::vector<int>> sets;
  std::vector<int> ranks;
  for (const auto& o : orbs) {
    sets.push_back(o.elements);
    ranks.push_back(o.rank);
  }
  std::sort(sets.begin(), sets.end());
  CHECK(sets == std::vector<std::vector<int>>{{1}, {2, 3, 5}, {4, 6, 7}, {8}});
  // The two fixed corners are points; each 3-orbit spans a triangle.
  std::sort(ranks.begin(), ranks.end());
  CHECK(ranks == std::vector<int>{1, 1, 3, 3});

  Permutation face = perm(kCubeFace);
  REQUIRE(classify_permutation(cube, face) == SymmetryKind::Rotation);
  auto forbs = orbits(cyclic_closure(face), cube);
  REQUIRE(forbs.size() == 2);
  CHECK(forbs[0].elements == std::vector<int>{1, 3, 5, 7});
  CHECK(forbs[1].elements == std::vector<int>{2, 4, 6, 8});
  CHECK(forbs[0].rank == 3);
  CHECK(forbs[1].rank == 3);

  CHECK_THROWS_AS(orbits({Permutation::identity(3)}, cube), std::invalid_argument);
}

TEST_CASE("fixed sets of nontrivial rotations have low rank") {
  const Chirotope& cube = corpus::example("cube");
  FixedRankResult res = fixed_rank_check(cube, perm(kCubeDiagonal));
  CHECK(res.fixed_elements == std::vector<int>{1, 8});
  CHECK(res.fixed_rank == 2);
  CHECK(res.bound_holds);

  // Rank 3: a polygon rotation fixing the centroid.
  PointConfig tri;
  tri.dim = 2;
  tri.points = {{1, 0}, {0, 1}, {-1, -1}, {0, 0}};
  tri.field = NumField::Q;
  Chirotope chi = chirotope_from_points(tri);
  FixedRankResult centro = fixed_rank_check(chi, perm({2, 3, 1, 4}));
  CHECK(centro.fixed_elements == std::vector<int>{4});
  CHECK(centro.fixed_rank == 1);
  CHECK(centro.bound_holds);

  // The identity moves nothing, a reflection is not a rotation, and loops
  // are out of scope.
  CHECK_THROWS_AS(fixed_rank_check(cube, Permutation::identity(8)),
                  std::invalid_argument);
  CHECK_THROWS_AS(fixed_rank_check(corpus::alternating(3, 3), perm({2, 1, 3})),
                  std::invalid_argument);
  Chirotope looped(1, 2, {Sign::Plus, Sign::Zero});
  CHECK_THROWS_AS(fixed_rank_check(looped, perm({1, 2})), std::invalid_argument);
}

TEST_CASE("rigidity: rotations agreeing on a spanning set coincide") {
  const Chirotope& cube = corpus::example("cube");
  static const SymmetryGroup group = symmetry_group(cube);
  auto rots = group.rotations();
  REQUIRE(rots.size() == 24);

  for (const auto& p : rots) {
    std::vector<int> all(8);
    for (int i = 0; i < 8; ++i) all[i] = i + 1;
    CHECK(rigidity_check(cube, p, p, all) == RigidityVerdict::Holds);
  }

  // Distinct rotations never agree on a set of rank >= 3, so the check can
  // only ever answer NotApplicable for them.
  for (const auto& p : rots) {
    for (const auto& q : rots) {
      if (p == q) continue;
      std::vector<int> agree;
      for (int e = 1; e <= 8; ++e)
        if (p(e) == q(e)) agree.push_back(e);
      CHECK(rigidity_check(cube, p, q, agree) == RigidityVerdict::NotApplicable);
    }
  }

  CHECK_THROWS_AS(rigidity_check(cube, rots[0], rots[1], {9}),
                  std::invalid_argument);
  Permutation refl = perm({2, 1, 3, 4, 5, 6, 7, 8});
  if (classify_permutation(cube, refl) != SymmetryKind::Rotation) {
    std::vector<int> empty;
    CHECK_THROWS_AS(rigidity_check(cube, refl, refl, empty), std::invalid_argument);
  }
  // p and q must actually agree on the given subset.
  Permutation a = rots[1];
  std::vector<int> moved;
  for (int e = 1; e <= 8; ++e)
    if (a(e) != e) moved.push_back(e);
  REQUIRE(!moved.empty());
  CHECK_THROWS_AS(
      rigidity_check(cube, a, Permutation::identity(8), {moved.front()}),
      std::invalid_argument);
}

TEST_CASE("cyclicity criterion on rank-4 examples") {
  const Chirotope& cube = corpus::example("cube");
  static const SymmetryGroup cube_group = symmetry_group(cube);

  CyclicityResult c4 = cyclicity_criterion(cube, cyclic_closure(perm(kCubeFace)));
  CHECK(c4.group_cyclic);
  CHECK(c4.group_name == "C_4");
  CHECK(c4.max_orbit_rank == 3);
  CHECK(c4.criterion_consistent);

  CyclicityResult full = cyclicity_criterion(cube, cube_group.rotations());
  CHECK_FALSE(full.group_cyclic);
  CHECK(full.group_name == "S4");
  CHECK(full.max_orbit_rank == 4);
  CHECK(full.criterion_consistent);

  const Chirotope& icosa = corpus::example("icosahedron");
  static const SymmetryGroup icosa_group = symmetry_group(icosa);
  auto irots = icosa_group.rotations();
  REQUIRE(irots.size() == 60);

  CyclicityResult c5 =
      cyclicity_criterion(icosa, cyclic_closure(first_of_order(irots, 5)));
  CHECK(c5.group_cyclic);
  CHECK(c5.group_name == "C_5");
  CHECK(c5.max_orbit_rank == 3);
  CHECK(c5.criterion_consistent);

  CyclicityResult a5 = cyclicity_criterion(icosa, irots);
  CHECK_FALSE(a5.group_cyclic);
  CHECK(a5.group_name == "A5");
  CHECK(a5.max_orbit_rank == 4);
  CHECK(a5.criterion_consistent);

  // Guards: wrong rank, unclosed sets, non-rotations.
  CHECK_THROWS_AS(
      cyclicity_criterion(corpus::alternating(3, 5),
                          {Permutation::identity(5)}),
      std::invalid_argument);
  Permutation face = perm(kCubeFace);
  CHECK_THROWS_AS(
      cyclicity_criterion(cube, {Permutation::identity(8), face}),
      std::invalid_argument);
  Permutation mirror = perm({5, 6, 7, 8, 1, 2, 3, 4});  // x -> 1-x
  REQUIRE(classify_permutation(cube, mirror) == SymmetryKind::Reflection);
  CHECK_THROWS_AS(
      cyclicity_criterion(cube, {Permutation::identity(8), mirror}),
      std::invalid_argument);
}

TEST_CASE("maximal cyclic subgroups of the cube rotations") {
  MaxCyclicReport rep = maximal_cyclic_intersection_check(corpus::example("cube"));
  // Three face axes (C4), four diagonals (C3), six edge axes (C2).
  CHECK(rep.count == 13);
  CHECK(rep.all_intersections_trivial);
  CHECK(rep.offending.empty());

  MaxCyclicReport simplex =
      maximal_cyclic_intersection_check(corpus::example("simplex"));
  // A4: four C3 plus the three involutions of the Klein subgroup.
  CHECK(simplex.count == 7);
  CHECK(simplex.all_intersections_trivial);
}

TEST_CASE("flat orderings along a cyclic subgroup") {
  const Chirotope& cube = corpus::example("cube");

  FlatOrderingsResult c4 = flat_orderings(cube, cyclic_closure(perm(kCubeFace)));
  REQUIRE(c4.flats.size() == 2);
  CHECK(c4.flats[0] == std::vector<int>{1, 3, 5, 7});
  CHECK(c4.flats[1] == std::vector<int>{2, 4, 6, 8});
  CHECK_FALSE(c4.degenerate);
  REQUIRE(c4.orderings.size() == 2);
  CHECK(c4.lemma_holds);

  FlatOrderingsResult c3 =
      flat_orderings(cube, cyclic_closure(perm(kCubeDiagonal)));
  // Only the two triangle orbits give rank-3 flats; the fixed corners do not.
  CHECK(c3.flats.size() == 2);
  CHECK(c3.lemma_holds);

  const Chirotope& icosa = corpus::example("icosahedron");
  static const SymmetryGroup icosa_group = symmetry_group(icosa);
  auto irots = icosa_group.rotations();

  FlatOrderingsResult i5 =
      flat_orderings(icosa, cyclic_closure(first_of_order(irots, 5)));
  CHECK(i5.flats.size() == 2);
  CHECK(i5.lemma_holds);

  FlatOrderingsResult i3 =
      flat_orderings(icosa, cyclic_closure(first_of_order(irots, 3)));
  CHECK(i3.flats.size() == 4);
  CHECK(i3.lemma_holds);

  // A pyramid's ring is its only rank-3 orbit: nothing to order.
  const Chirotope& pyr = corpus::example("pyramid", 5);
  FlatOrderingsResult deg =
      flat_orderings(pyr, cyclic_closure(perm({2, 3, 4, 5, 1, 6})));
  CHECK(deg.degenerate);
  CHECK(deg.orderings.empty());
  CHECK_FALSE(deg.lemma_holds);

  // Order 2 or non-cyclic subgroups are rejected.
  Permutation half = perm(kCubeFace) * perm(kCubeFace);
  CHECK_THROWS_AS(flat_orderings(cube, cyclic_closure(half)),
                  std::invalid_argument);
  static const SymmetryGroup cube_group = symmetry_group(cube);
  CHECK_THROWS_AS(flat_orderings(cube, cube_group.rotations()),
                  std::invalid_argument);
}

TEST_CASE("rank-4 classification") {
  Rank4Classification simplex = classify_rank4(corpus::example("simplex"));
  CHECK(simplex.rotation_group.name == "A4");
  CHECK(simplex.rotation_group.order == 12);
  CHECK(simplex.in_allowed_families);
  CHECK(simplex.full_group_order == 24);
  CHECK(simplex.reflection_count == 12);

  Rank4Classification cube = classify_rank4(corpus::example("cube"));
  CHECK(cube.rotation_group.name == "S4");
  CHECK(cube.rotation_group.order == 24);
  CHECK(cube.in_allowed_families);
  CHECK(cube.full_group_order == 48);
  CHECK(cube.reflection_count == 24);

  Rank4Classification p2 = classify_rank4(corpus::example("P2"));
  CHECK(p2.rotation_group.name == "C_2");
  CHECK(p2.in_allowed_families);

  CHECK_THROWS_AS(classify_rank4(corpus::alternating(3, 5)), std::invalid_argument);
  CHECK_THROWS_AS(classify_rank4(corpus::cube_contraction()), std::invalid_argument);
}

TEST_SUITE_END();
