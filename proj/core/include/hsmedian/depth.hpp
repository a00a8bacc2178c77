#pragma once

#include "hsmedian/geometry.hpp"

namespace hsm {

// Depth stored as an integer count k over a sample size N; the fraction k/N
// is only materialized for output. Comparisons cross-multiply exactly.
struct DepthValue {
  long count = 0;
  long total = 1;

  friend int compare(const DepthValue& a, const DepthValue& b) {
    long lhs = a.count * b.total;
    long rhs = b.count * a.total;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
  friend bool operator==(const DepthValue& a, const DepthValue& b) { return compare(a, b) == 0; }
  friend bool operator<(const DepthValue& a, const DepthValue& b) { return compare(a, b) < 0; }
};

std::string to_string(const DepthValue& v);

// One representative direction of a combinatorial cell that attains the
// depth; boundary_indices are the sample points exactly on the witness
// hyperplane through x (for cell-interior witnesses these are the sample
// points equal to x itself).
struct DepthWitness {
  Direction direction;
  long count = 0;
  std::vector<std::size_t> boundary_indices;
};

struct DepthRegion {
  DepthValue level;
  int affine_dim = 0;               // 0 point, 1 segment, 2 polygon
  std::vector<Vec> vertices;        // extreme points in canonical order
};

// Exact halfspace depth of x, d in {1,2,3}.
DepthValue tukey_depth(const Vec& x, const PointSet& X);

// All minimal-count witnesses, one per combinatorial cell, deduplicated by
// the sign partition of the sample they induce.
std::vector<DepthWitness> optimal_directions(const Vec& x, const PointSet& X);

// Maximum depth count over all of R^d. Multiset-safe. d in {1,2,3}; the d=3
// path scans candidate vertices and is meant for small samples.
long max_depth_count(const PointSet& X);

// {x : depth(x) >= k} for a planar multiset, as an exact convex polygon
// (possibly a segment, a point, or empty).
DepthRegion depth_region_2d(const PointSet& X, long k);

// {x : depth(x) >= k} for a univariate multiset: a closed interval.
DepthRegion depth_region_1d(const PointSet& X, long k);

// The maximum-depth region M(X); requires general position, d in {1,2}.
DepthRegion max_depth_region(const PointSet& X);

// Centroid of M(X): the point itself, segment midpoint, or polygon centroid
// with exact fan-triangulation area weights.
Vec tukey_median(const PointSet& X);
Vec region_centroid(const DepthRegion& r);

// Depth restricted to directions orthogonal to u: the infimum over unit
// vectors v orthogonal to u of #{i : dot(v, W_i) <= 0}. Points of W parallel
// to u count in every halfspace. d in {2,3}.
DepthValue angular_depth(const Direction& u, const PointSet& W);

// A direction maximizing angular_depth over an exhaustive stratum candidate
// set; ties broken lexicographically on the canonical form.
Direction angular_median(const PointSet& W);

}  // namespace hsm
