#pragma once

#include "hsmedian/rational.hpp"

namespace hsm {

using Mat = std::vector<Vec>;  // row-major

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& s, const Vec& a);
Vec vec_neg(const Vec& a);
Rat dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& a);

// Squared Euclidean norm; exact (no square roots anywhere in the library).
Rat norm_sq(const Vec& a);

Vec cross3(const Vec& a, const Vec& b);
// 90-degree counterclockwise rotation in the plane.
Vec perp2(const Vec& a);

Rat det2(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
Rat det3(const Vec& a, const Vec& b, const Vec& c);

// Rank via exact Gaussian elimination. Rows may have any common length.
int rank(Mat m);

// Affine rank of a point list (rank of differences to the first point).
int affine_rank(const std::vector<Vec>& pts);

// Solves a*x = rhs for square exact systems. Returns false when singular.
bool solve_linear(Mat a, Vec rhs, Vec& out);

// One nonzero vector orthogonal to all rows (rows span at most dim-1).
// Returns an empty vector when the null space is trivial or rows are
// rank-deficient by more than one.
Vec null_vector(const Mat& rows, std::size_t dim);

// Clears denominators and divides by the content, keeping orientation.
// The result is an integer vector with gcd 1, a positive multiple of `v`.
Vec canonical_ray(const Vec& v);

// Same reduction but additionally flips sign so the first nonzero entry is
// positive. Identifies v and -v; used for hyperplane normals.
Vec canonical_line(const Vec& v);

}  // namespace hsm
