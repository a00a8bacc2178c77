#include "hsmedian/depth.hpp"

#include <algorithm>
#include <map>

#include "hsmedian/arrangement.hpp"

namespace hsm {

namespace {

struct Diffs {
  std::vector<Vec> nonzero;
  long equal_to_x = 0;
};

Diffs diffs_from(const Vec& x, const PointSet& X) {
  Diffs d;
  for (const Vec& p : X.points) {
    Vec v = vec_sub(p, x);
    if (is_zero_vec(v))
      ++d.equal_to_x;
    else
      d.nonzero.push_back(std::move(v));
  }
  return d;
}

long cell_count(const Vec& u, const Diffs& d) {
  long c = d.equal_to_x;
  for (const Vec& v : d.nonzero)
    if (dot(u, v) < 0) ++c;
  return c;
}

std::vector<Vec> depth_cell_reps(const Vec& x, const PointSet& X, const Diffs& d,
                                 const Vec* extra_normal) {
  std::vector<Vec> normals = d.nonzero;
  if (extra_normal != nullptr && !is_zero_vec(*extra_normal)) normals.push_back(*extra_normal);
  switch (X.dim()) {
    case 2: return circle_cells(normals);
    case 3: return sphere_strata(normals, false).cell_reps;
    default: throw UnsupportedDimension("exact depth cells need d in {2,3}");
  }
}

DepthValue depth_1d(const Vec& x, const PointSet& X) {
  long le = 0, ge = 0;
  for (const Vec& p : X.points) {
    if (p[0] <= x[0]) ++le;
    if (p[0] >= x[0]) ++ge;
  }
  return {std::min(le, ge), static_cast<long>(X.n())};
}

std::vector<DepthWitness> witnesses_1d(const Vec& x, const PointSet& X) {
  long le = 0, ge = 0, eq = 0;
  for (const Vec& p : X.points) {
    if (p[0] < x[0]) ++le;
    if (p[0] > x[0]) ++ge;
    if (p[0] == x[0]) ++eq;
  }
  const long dplus = le + eq;   // halfline (-inf, x]
  const long dminus = ge + eq;  // halfline [x, +inf)
  const long best = std::min(dplus, dminus);
  std::vector<DepthWitness> out;
  for (int s : {1, -1}) {
    long c = s == 1 ? dplus : dminus;
    if (c != best) continue;
    DepthWitness w;
    w.direction = Direction(Vec{Rat(s)});
    w.count = c;
    for (std::size_t i = 0; i < X.n(); ++i)
      if (X[i][0] == x[0]) w.boundary_indices.push_back(i);
    out.push_back(std::move(w));
  }
  return out;
}

// Constraint directions for planar depth regions: every edge of a Tukey
// region lies on a line through two sample points, so the halfplanes with
// pair normals (both orientations) cut the region exactly.
std::vector<Vec> pair_normals_2d(const PointSet& X) {
  std::vector<Vec> lines;
  for (std::size_t i = 0; i < X.n(); ++i)
    for (std::size_t j = i + 1; j < X.n(); ++j) {
      Vec d = vec_sub(X[j], X[i]);
      if (is_zero_vec(d)) continue;
      lines.push_back(canonical_line(perp2(d)));
    }
  std::sort(lines.begin(), lines.end(),
            [](const Vec& a, const Vec& b) { return compare_lex(a, b) < 0; });
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

Rat kth_smallest(std::vector<Rat> vals, long k) {
  std::nth_element(vals.begin(), vals.begin() + (k - 1), vals.end());
  return vals[k - 1];
}

// Sutherland-Hodgman clip of a convex loop by {p : dot(u,p) >= q}, exact.
std::vector<Vec> clip_halfplane(const std::vector<Vec>& poly, const Vec& u, const Rat& q) {
  std::vector<Vec> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& a = poly[i];
    const Vec& b = poly[(i + 1) % n];
    Rat da = dot(u, a) - q;
    Rat db = dot(u, b) - q;
    if (da >= 0) out.push_back(a);
    if ((da > 0 && db < 0) || (da < 0 && db > 0)) {
      Rat t = da / (da - db);
      out.push_back(vec_add(a, vec_scale(t, vec_sub(b, a))));
    }
  }
  return out;
}

std::vector<Vec> convex_polygon_ccw(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Vec& a, const Vec& b) { return compare_lex(a, b) < 0; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto turn = [](const Vec& a, const Vec& b, const Vec& c) {
    return det2(b[0] - a[0], b[1] - a[1], c[0] - a[0], c[1] - a[1]);
  };
  std::vector<Vec> lower, upper;
  for (const Vec& p : pts) {
    while (lower.size() >= 2 && turn(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 && turn(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

DepthRegion finalize_region_2d(std::vector<Vec> pts, long k, long n) {
  DepthRegion r;
  r.level = {k, n};
  std::sort(pts.begin(), pts.end(),
            [](const Vec& a, const Vec& b) { return compare_lex(a, b) < 0; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) {
    r.affine_dim = -1;
    return r;
  }
  r.affine_dim = affine_rank(pts);
  if (r.affine_dim == 0) {
    r.vertices = {pts[0]};
  } else if (r.affine_dim == 1) {
    r.vertices = {pts.front(), pts.back()};  // lex extremes of a collinear set
  } else {
    r.vertices = convex_polygon_ccw(std::move(pts));
    // canonical start: lexicographically smallest vertex first
    std::size_t best = 0;
    for (std::size_t i = 1; i < r.vertices.size(); ++i)
      if (compare_lex(r.vertices[i], r.vertices[best]) < 0) best = i;
    std::rotate(r.vertices.begin(), r.vertices.begin() + best, r.vertices.end());
  }
  return r;
}

// Candidate scan for the 3D maximum: region vertices in space lie on
// intersections of three planes through sample triples.
long max_depth_count_3d(const PointSet& X) {
  const std::size_t n = X.n();
  std::vector<std::pair<Vec, Rat>> planes;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec nrm = cross3(vec_sub(X[j], X[i]), vec_sub(X[k], X[i]));
        if (is_zero_vec(nrm)) continue;
        planes.emplace_back(nrm, dot(nrm, X[i]));
      }
  std::vector<Vec> candidates = X.points;
  for (std::size_t a = 0; a < planes.size(); ++a)
    for (std::size_t b = a + 1; b < planes.size(); ++b)
      for (std::size_t c = b + 1; c < planes.size(); ++c) {
        Mat m = {planes[a].first, planes[b].first, planes[c].first};
        Vec rhs = {planes[a].second, planes[b].second, planes[c].second};
        Vec x;
        if (solve_linear(m, rhs, x)) candidates.push_back(std::move(x));
      }
    std::sort(candidates.begin(), candidates.end(),
              [](const Vec& a, const Vec& b) { return compare_lex(a, b) < 0; });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  long best = 0;
  for (const Vec& c : candidates) best = std::max(best, tukey_depth(c, X).count);
  return best;
}

}  // namespace

std::string to_string(const DepthValue& v) {
  return std::to_string(v.count) + "/" + std::to_string(v.total);
}

DepthValue tukey_depth(const Vec& x, const PointSet& X) {
  if (X.n() == 0) throw EmptySample();
  if (x.size() != X.dim()) throw DimensionMismatch("tukey_depth: query point dimension");
  if (X.dim() == 1) return depth_1d(x, X);
  if (X.dim() > 3) throw UnsupportedDimension("tukey_depth exact path needs d in {1,2,3}");
  Diffs d = diffs_from(x, X);
  const long n = static_cast<long>(X.n());
  if (d.nonzero.empty()) return {n, n};
  long best = n;
  for (const Vec& rep : depth_cell_reps(x, X, d, nullptr))
    best = std::min(best, cell_count(rep, d));
  return {best, n};
}

std::vector<DepthWitness> optimal_directions(const Vec& x, const PointSet& X) {
  if (X.n() == 0) throw EmptySample();
  if (x.size() != X.dim()) throw DimensionMismatch("optimal_directions: query point dimension");
  if (X.dim() == 1) return witnesses_1d(x, X);
  if (X.dim() > 3) throw UnsupportedDimension("optimal_directions needs d in {1,2,3}");
  Diffs d = diffs_from(x, X);
  const long n = static_cast<long>(X.n());
  if (d.nonzero.empty()) {
    DepthWitness w;
    Vec e(X.dim(), Rat(0));
    e[0] = 1;
    w.direction = Direction(e);
    w.count = n;
    for (std::size_t i = 0; i < X.n(); ++i) w.boundary_indices.push_back(i);
    return {w};
  }
  const long depth = tukey_depth(x, X).count;
  std::map<std::vector<int>, DepthWitness> cells;
  for (const Vec& rep : depth_cell_reps(x, X, d, nullptr)) {
    if (cell_count(rep, d) != depth) continue;
    std::vector<int> partition(X.n());
    DepthWitness w;
    w.direction = Direction(rep);
    w.count = depth;
    for (std::size_t i = 0; i < X.n(); ++i) {
      Rat s = dot(rep, vec_sub(X[i], x));
      partition[i] = sign(s);
      if (s == 0) w.boundary_indices.push_back(i);
    }
    cells.emplace(std::move(partition), std::move(w));
  }
  std::vector<DepthWitness> out;
  out.reserve(cells.size());
  for (auto& [part, w] : cells) out.push_back(std::move(w));
  return out;
}

DepthRegion depth_region_1d(const PointSet& X, long k) {
  const long n = static_cast<long>(X.n());
  std::vector<Rat> vals;
  vals.reserve(X.n());
  for (const Vec& p : X.points) vals.push_back(p[0]);
  std::sort(vals.begin(), vals.end());
  DepthRegion r;
  r.level = {k, n};
  bool found = false;
  Rat lo, hi;
  for (const Rat& v : vals) {
    long le = 0, ge = 0;
    for (const Rat& w : vals) {
      if (w <= v) ++le;
      if (w >= v) ++ge;
    }
    if (std::min(le, ge) >= k) {
      if (!found) { lo = v; found = true; }
      hi = v;
    }
  }
  if (!found) {
    r.affine_dim = -1;
    return r;
  }
  r.affine_dim = lo == hi ? 0 : 1;
  r.vertices.push_back({lo});
  if (lo != hi) r.vertices.push_back({hi});
  return r;
}

DepthRegion depth_region_2d(const PointSet& X, long k) {
  if (X.dim() != 2) throw DimensionMismatch("depth_region_2d: need d = 2");
  if (affine_rank(X.points) < 2)
    throw Error("depth_region_2d: sample spans no area; use the univariate region");
  const long n = static_cast<long>(X.n());
  Rat xmin = X[0][0], xmax = X[0][0], ymin = X[0][1], ymax = X[0][1];
  for (const Vec& p : X.points) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  std::vector<Vec> poly = {{xmin - 1, ymin - 1}, {xmax + 1, ymin - 1}, {xmax + 1, ymax + 1}, {xmin - 1, ymax + 1}};
  for (const Vec& line : pair_normals_2d(X)) {
    for (const Vec& u : {line, vec_neg(line)}) {
      std::vector<Rat> projs;
      projs.reserve(X.n());
      for (const Vec& p : X.points) projs.push_back(dot(u, p));
      Rat q = kth_smallest(std::move(projs), k);
      poly = clip_halfplane(poly, u, q);
      if (poly.empty()) return finalize_region_2d({}, k, n);
    }
  }
  return finalize_region_2d(std::move(poly), k, n);
}

long max_depth_count(const PointSet& X) {
  if (X.n() == 0) throw EmptySample();
  const long n = static_cast<long>(X.n());
  if (X.dim() == 1) {
    long best = 0;
    for (const Vec& p : X.points) best = std::max(best, depth_1d(p, X).count);
    return best;
  }
  if (X.dim() == 2) {
    long lo = std::max(1L, ceil_div(n, 3));  // centerpoint bound
    long hi = n;
    while (lo < hi) {
      long mid = lo + (hi - lo + 1) / 2;
      if (depth_region_2d(X, mid).affine_dim >= 0)
        lo = mid;
      else
        hi = mid - 1;
    }
    return lo;
  }
  if (X.dim() == 3) return max_depth_count_3d(X);
  throw UnsupportedDimension("max_depth_count needs d in {1,2,3}");
}

DepthRegion max_depth_region(const PointSet& X) {
  if (X.dim() > 2) throw UnsupportedDimension("max_depth_region geometry needs d in {1,2}");
  if (X.n() < X.dim() + 1) throw Error("max_depth_region: need n >= d+1");
  if (!is_general_position(X)) throw NotInGeneralPosition();
  long k = max_depth_count(X);
  return X.dim() == 1 ? depth_region_1d(X, k) : depth_region_2d(X, k);
}

Vec region_centroid(const DepthRegion& r) {
  if (r.affine_dim < 0 || r.vertices.empty()) throw Error("region_centroid: empty region");
  if (r.affine_dim == 0) return r.vertices[0];
  if (r.affine_dim == 1) return vec_scale(Rat(1, 2), vec_add(r.vertices.front(), r.vertices.back()));
  Rat area2 = 0;
  Vec weighted(2, Rat(0));
  const Vec& v0 = r.vertices[0];
  for (std::size_t i = 1; i + 1 < r.vertices.size(); ++i) {
    const Vec& a = r.vertices[i];
    const Vec& b = r.vertices[i + 1];
    Rat w = det2(a[0] - v0[0], a[1] - v0[1], b[0] - v0[0], b[1] - v0[1]);
    area2 += w;
    weighted[0] += w * (v0[0] + a[0] + b[0]);
    weighted[1] += w * (v0[1] + a[1] + b[1]);
  }
  return {weighted[0] / (3 * area2), weighted[1] / (3 * area2)};
}

Vec tukey_median(const PointSet& X) { return region_centroid(max_depth_region(X)); }

DepthValue angular_depth(const Direction& u, const PointSet& W) {
  const std::size_t d = W.dim();
  const long n = static_cast<long>(W.n());
  if (d != u.dim()) throw DimensionMismatch("angular_depth: direction dimension");
  for (const Vec& w : W.points)
    if (is_zero_vec(w)) throw Error("angular_depth: zero point on the sphere");
  if (d == 2) {
    Vec up = perp2(u.coords);
    long c1 = 0, c2 = 0;
    for (const Vec& w : W.points) {
      Rat s = dot(up, w);
      if (s <= 0) ++c1;
      if (s >= 0) ++c2;
    }
    return {std::min(c1, c2), n};
  }
  if (d != 3) throw UnsupportedDimension("angular_depth needs d in {2,3}");
  ComplementBasis basis = complement_basis(u);
  std::vector<Vec> flats;
  long always = 0;
  for (const Vec& w : W.points) {
    Vec f = {dot(basis.columns[0], w), dot(basis.columns[1], w)};
    if (is_zero_vec(f))
      ++always;  // parallel to u: inside every halfspace bounded through u
    else
      flats.push_back(std::move(f));
  }
  if (flats.empty()) return {n, n};
  long best = n;
  for (const Vec& rep : circle_cells(flats)) {
    long c = always;
    for (const Vec& f : flats)
      if (dot(rep, f) < 0) ++c;
    best = std::min(best, c);
  }
  return {best, n};
}

Direction angular_median(const PointSet& W) {
  const std::size_t d = W.dim();
  std::vector<Vec> rays;
  for (const Vec& w : W.points) {
    if (is_zero_vec(w)) throw Error("angular_median: zero point on the sphere");
    rays.push_back(canonical_ray(w));
  }
  std::sort(rays.begin(), rays.end(),
            [](const Vec& a, const Vec& b) { return compare_lex(a, b) < 0; });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (rays.size() < 2) throw NotInGeneralPosition("angular_median: all sphere points coincide");

  std::vector<Vec> candidates;
  if (d == 2) {
    std::vector<Vec> marks;
    for (const Vec& w : rays) {
      marks.push_back(w);
      marks.push_back(vec_neg(w));
    }
    ArcSubdivision sub = subdivide_circle(marks);
    candidates = sub.marks;
    candidates.insert(candidates.end(), sub.gap_reps.begin(), sub.gap_reps.end());
  } else if (d == 3) {
    // The angular depth value can change only where the plane orthogonal to
    // u meets a sample direction, or where two projected directions align;
    // both events trace great circles, and the value is constant on the
    // strata of their joint arrangement.
    std::vector<Vec> circles = rays;
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t j = i + 1; j < rays.size(); ++j) {
        Vec c = cross3(rays[i], rays[j]);
        if (!is_zero_vec(c)) circles.push_back(std::move(c));
      }
    SphereStrata strata = sphere_strata(circles, true);
    candidates = strata.cell_reps;
    candidates.insert(candidates.end(), strata.vertices.begin(), strata.vertices.end());
    candidates.insert(candidates.end(), strata.arc_reps.begin(), strata.arc_reps.end());
    for (const Vec& w : rays) {
      candidates.push_back(w);
      candidates.push_back(vec_neg(w));
    }
  } else {
    throw UnsupportedDimension("angular_median needs d in {2,3}");
  }

  bool have = false;
  Direction best;
  long best_count = -1;
  for (const Vec& c : candidates) {
    if (is_zero_vec(c)) continue;
    Direction u(c);
    long count = angular_depth(u, W).count;
    if (!have || count > best_count ||
        (count == best_count && compare_lex(u.coords, best.coords) < 0)) {
      best = u;
      best_count = count;
      have = true;
    }
  }
  return best;
}

}  // namespace hsm
