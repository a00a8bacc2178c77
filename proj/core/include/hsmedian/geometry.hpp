#pragma once

#include <cstdint>
#include <optional>

#include "hsmedian/errors.hpp"
#include "hsmedian/linalg.hpp"

namespace hsm {

// An n x d multiset of exact-rational points. Immutable after construction;
// all operations on it are pure functions.
struct PointSet {
  std::vector<Vec> points;

  PointSet() = default;
  explicit PointSet(std::vector<Vec> pts);

  std::size_t n() const { return points.size(); }
  std::size_t dim() const { return points.empty() ? 0 : points[0].size(); }
  const Vec& operator[](std::size_t i) const { return points[i]; }

  bool has_duplicates() const;
};

// A direction u, kept as a rational vector up to positive scaling. Stored in
// canonical-ray form (integer entries, gcd 1, orientation preserved), since
// every depth count in the library is invariant under positive scaling and
// unit-length normalization would leave the rationals.
struct Direction {
  Vec coords;

  Direction() = default;
  explicit Direction(const Vec& v);

  std::size_t dim() const { return coords.size(); }

  // Identifies u with -u (first nonzero entry positive).
  Vec line_form() const { return canonical_line(coords); }

  friend bool operator==(const Direction& a, const Direction& b) {
    return a.coords == b.coords;
  }
  friend bool operator<(const Direction& a, const Direction& b) {
    return compare_lex(a.coords, b.coords) < 0;
  }
};

// d-1 rational vectors exactly orthogonal to a direction and linearly
// independent. Exact orthogonality replaces orthonormality; depth of the
// projected set is invariant under any invertible re-basis of the complement.
struct ComplementBasis {
  Vec direction;            // the u the basis complements
  std::vector<Vec> columns; // size d-1, each of length d
};

enum class Containment { Interior, Boundary, Outside };

struct HullFacet {
  Vec normal;  // canonical-line scaled; inequality is dot(normal, x) <= offset
  Rat offset;
  std::vector<std::size_t> incident;  // source indices lying on the facet plane
};

// Convex hull for d in {1,2,3} with exact facet inequalities. Degenerate
// (lower-dimensional) hulls are represented by equality facet pairs and carry
// their affine dimension.
struct ConvexHull {
  std::size_t dim = 0;
  int affine_dim = 0;
  std::vector<HullFacet> facets;
  std::vector<std::size_t> vertices;  // indices into the source point set
  std::vector<Vec> vertex_points;
};

// True iff every (d+1)-subset spans affine dimension d; for n <= d, true iff
// the points are affinely independent. Duplicate points always fail.
bool is_general_position(const PointSet& x);

// The C(n,d) sign-canonical normals of hyperplanes through d-subsets of the
// sample, subsets in lexicographic order.
std::vector<Direction> hyperplane_normals(const PointSet& x);

// A direction with exactly nonzero dot product against every hyperplane
// normal. Seeded rational sampling with exact verification; deterministic for
// a fixed seed.
Direction pick_generic_direction(const PointSet& x, std::uint64_t seed);

// Coordinate-pivot construction: with p the first nonzero coordinate of u,
// the basis vector for index i != p is e_i*u_p - e_p*u_i.
ComplementBasis complement_basis(const Direction& u);

// x_i -> B^T x_i, an n x (d-1) point set.
PointSet project(const PointSet& x, const ComplementBasis& b);
Vec project_point(const Vec& p, const ComplementBasis& b);

// Lifts a projected point back onto the fiber {x : B^T x = q} along u;
// returns the unique preimage inside span(columns). Adding t*u moves along
// the fiber without changing the projection.
Vec lift_point(const Vec& q, const ComplementBasis& b);

ConvexHull convex_hull(const PointSet& x);

Containment hull_contains(const ConvexHull& h, const Vec& p);

// The 0, 1 or 2 boundary intersection points of {base + t*dir} with the hull
// boundary, ordered by t. A line touching a single vertex reports one point.
std::vector<Vec> line_hull_intersection(const ConvexHull& h, const Vec& base, const Direction& dir);

}  // namespace hsm
