// Exact point configurations and the chirotopes they induce. Ships the
// named example families (pyramids, bipyramids, platonic configurations,
// the 8-point gap configuration) plus the stacked-copies construction that
// produces a combinatorial symmetry with no geometric realization.
//
// Coordinates live in Q or Q(sqrt5); regular polygons are replaced by exact
// convex polygons with the same cyclic/dihedral linear symmetry (lattice
// constructions for 3, 4, 6 vertices, a golden-ratio pentagon for 5), which
// is all the oriented matroid can see.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omt/chirotope.hpp"
#include "omt/permutation.hpp"
#include "omt/quadext.hpp"

namespace omt {

enum class NumField { Q, QSqrt5 };

struct PointConfig {
  int dim = 0;
  NumField field = NumField::Q;
  std::vector<std::vector<QuadExt>> points;  // each of length dim

  int size() const { return static_cast<int>(points.size()); }

  // {"dim": d, "field": "Q"|"Q(sqrt5)", "points": [[coordinate strings]]}.
  // Serialization is deterministic; parsing accepts strings or integers for
  // coordinates and rejects floating-point literals.
  std::string to_json() const;
  static PointConfig from_json(const std::string& text);
};

// Rank d+1 chirotope of determinant signs of homogenized points (coordinate
// 1 appended). Requires at least d+1 points.
Chirotope chirotope_from_points(const PointConfig& cfg);

// Named example configurations:
//   paper8           the 8-point rank-4 gap configuration
//   P2, P3           the 7-point double-row pyramid and the triangular prism
//   pyramid          n-gon at z=0 plus an apex (param n in {4,5,6})
//   bipyramid        n-gon at z=0 plus two apexes (param n in {3,4,5,6})
//   simplex          4 affinely independent points
//   cube             the 8 vertices of {0,1}^3
//   icosahedron      12 vertices over Q(sqrt5)
//   polygon          the planar exact n-gon itself (param n in {3,4,5,6})
// Unknown names or unsupported params throw std::invalid_argument.
PointConfig example_config(const std::string& name, int param = 0);

// True iff point i (1-based) lies on no affine line through two other
// configuration points; decided by exact rank of homogenized triples.
bool is_generic_point(const PointConfig& cfg, int i);

struct GapOptions {
  // Joint points for the two stacked copies. Either both or neither; when
  // absent, small-denominator rational candidates are searched in a fixed
  // deterministic order.
  std::optional<std::vector<QuadExt>> q1;
  std::optional<std::vector<QuadExt>> q2;
};

struct GapResult {
  PointConfig config;   // 2n+2 points: base at z=0, copy at z=1, q1, q2
  Permutation tau;      // acts as sigma on both copies, fixes q1 and q2
  Chirotope chirotope;  // chirotope_from_points(config)
};

// Stacks two copies of a planar configuration with an exact rotational
// symmetry sigma of order > 2 and adjoins two generic joint points. The
// returned tau is verified to preserve the basis structure of the chirotope;
// by construction it is not realizable by any affine map. Requirements on
// q1/q2 (genericity, non-vertical joint line, nonzero stacking values) are
// rechecked and failures throw ValidationError.
GapResult gap_construction(const PointConfig& base, const Permutation& sigma,
                           const GapOptions& options = {});

}  // namespace omt
