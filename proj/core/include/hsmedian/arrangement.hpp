#pragma once

#include "hsmedian/linalg.hpp"

namespace hsm {

// Directions on the unit circle split into arcs by a finite set of marks.
// `gap_reps[i]` is an exact interior direction of the open arc that starts at
// `marks[i]` in counterclockwise order. Marks are deduplicated and sorted.
struct ArcSubdivision {
  std::vector<Vec> marks;
  std::vector<Vec> gap_reps;
};

// mark_dirs are nonzero 2D vectors identified up to positive scaling.
ArcSubdivision subdivide_circle(const std::vector<Vec>& mark_dirs);

// Open cells of the S^1 arrangement cut by the lines {u : dot(u,v) = 0} for
// the given nonzero vectors v. Every open cell gets one exact representative;
// representatives satisfy dot(rep, v) != 0 for all v.
std::vector<Vec> circle_cells(const std::vector<Vec>& normals);

// Strata of the S^2 arrangement cut by great circles {u : dot(u,m) = 0}.
//   cell_reps: one interior representative per full-dimensional cell
//              (deduplicated by the sign vector against all circles);
//   vertices:  pairwise circle intersections, both orientations;
//   arc_reps:  one interior point per arc between consecutive vertices on
//              each circle (only when with_boundary_strata is set).
struct SphereStrata {
  std::vector<Vec> cell_reps;
  std::vector<Vec> vertices;
  std::vector<Vec> arc_reps;
};

SphereStrata sphere_strata(const std::vector<Vec>& normals, bool with_boundary_strata);

// Exact counterclockwise angular comparison of nonzero 2D vectors starting
// from the positive x-axis. Returns <0, 0, >0.
int compare_angular(const Vec& a, const Vec& b);

}  // namespace hsm
