#include "hsmedian/geometry.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace hsm {

namespace {

// Lexicographic k-subsets of {0,...,n-1}.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

// Joint canonical scaling of a facet inequality dot(n,x) <= c.
HullFacet make_facet(const Vec& normal, const Rat& offset) {
  Vec joint = normal;
  joint.push_back(offset);
  joint = canonical_ray(joint);
  HullFacet f;
  f.offset = joint.back();
  joint.pop_back();
  f.normal = std::move(joint);
  return f;
}

void fill_incident(HullFacet& f, const PointSet& x) {
  for (std::size_t i = 0; i < x.n(); ++i)
    if (dot(f.normal, x[i]) == f.offset) f.incident.push_back(i);
}

// Pins a degenerate hull to the affine span of its points: for every
// direction w orthogonal to the span, emit the equality pair w.x = w.p0.
void add_span_equalities(ConvexHull& h, const PointSet& x, const Mat& span_dirs) {
  const std::size_t d = x.dim();
  Vec n = null_vector(span_dirs, d);
  Mat rows = span_dirs;
  while (!n.empty()) {
    Rat c = dot(n, x[0]);
    h.facets.push_back(make_facet(n, c));
    h.facets.push_back(make_facet(vec_neg(n), -c));
    rows.push_back(n);
    n = null_vector(rows, d);
  }
}

void chain_push(std::vector<Vec>& chain, const Vec& p) {
  while (chain.size() >= 2) {
    const Vec& a = chain[chain.size() - 2];
    const Vec& b = chain[chain.size() - 1];
    Rat turn = det2(b[0] - a[0], b[1] - a[1], p[0] - a[0], p[1] - a[1]);
    if (turn > 0) break;  // strict left turn kept; collinear points dropped
    chain.pop_back();
  }
  chain.push_back(p);
}

// Counterclockwise hull of >=3 points of affine rank 2. Returns vertex list.
std::vector<Vec> hull2d_ccw(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Vec& a, const Vec& b) { return compare_lex(a, b) < 0; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Vec> lower, upper;
  for (const Vec& p : pts) chain_push(lower, p);
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) chain_push(upper, *it);
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

ConvexHull hull_1d(const PointSet& x) {
  ConvexHull h;
  h.dim = 1;
  std::size_t imin = 0, imax = 0;
  for (std::size_t i = 1; i < x.n(); ++i) {
    if (x[i][0] < x[imin][0]) imin = i;
    if (x[i][0] > x[imax][0]) imax = i;
  }
  h.affine_dim = x[imin][0] == x[imax][0] ? 0 : 1;
  h.facets.push_back(make_facet({Rat(1)}, x[imax][0]));
  h.facets.push_back(make_facet({Rat(-1)}, -x[imin][0]));
  h.vertices = {imin};
  if (imax != imin) h.vertices.push_back(imax);
  for (auto i : h.vertices) h.vertex_points.push_back(x[i]);
  for (auto& f : h.facets) fill_incident(f, x);
  return h;
}

ConvexHull hull_2d(const PointSet& x) {
  ConvexHull h;
  h.dim = 2;
  std::vector<Vec> uniq(x.points);
  std::sort(uniq.begin(), uniq.end(),
            [](const Vec& a, const Vec& b) { return compare_lex(a, b) < 0; });
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  h.affine_dim = affine_rank(uniq);

  if (h.affine_dim == 0) {
    for (std::size_t axis = 0; axis < 2; ++axis) {
      Vec e(2, Rat(0));
      e[axis] = 1;
      h.facets.push_back(make_facet(e, x[0][axis]));
      h.facets.push_back(make_facet(vec_neg(e), -x[0][axis]));
    }
    h.vertices = {0};
  } else if (h.affine_dim == 1) {
    Vec w = canonical_ray(vec_sub(uniq.back(), uniq.front()));
    Vec p = perp2(w);
    Rat c = dot(p, x[0]);
    h.facets.push_back(make_facet(p, c));
    h.facets.push_back(make_facet(vec_neg(p), -c));
    Rat lo = dot(w, x[0]), hi = lo;
    std::size_t ilo = 0, ihi = 0;
    for (std::size_t i = 1; i < x.n(); ++i) {
      Rat t = dot(w, x[i]);
      if (t < lo) { lo = t; ilo = i; }
      if (t > hi) { hi = t; ihi = i; }
    }
    h.facets.push_back(make_facet(w, hi));
    h.facets.push_back(make_facet(vec_neg(w), -lo));
    h.vertices = {ilo, ihi};
  } else {
    std::vector<Vec> ccw = hull2d_ccw(uniq);
    for (std::size_t i = 0; i < ccw.size(); ++i) {
      const Vec& a = ccw[i];
      const Vec& b = ccw[(i + 1) % ccw.size()];
      Vec edge = vec_sub(b, a);
      Vec outward = {edge[1], -edge[0]};
      h.facets.push_back(make_facet(outward, dot(outward, a)));
    }
    for (const Vec& v : ccw)
      for (std::size_t i = 0; i < x.n(); ++i)
        if (x[i] == v) { h.vertices.push_back(i); break; }
  }
  for (auto i : h.vertices) h.vertex_points.push_back(x[i]);
  for (auto& f : h.facets) fill_incident(f, x);
  return h;
}

ConvexHull hull_3d(const PointSet& x) {
  ConvexHull h;
  h.dim = 3;
  std::vector<Vec> uniq(x.points);
  std::sort(uniq.begin(), uniq.end(),
            [](const Vec& a, const Vec& b) { return compare_lex(a, b) < 0; });
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  h.affine_dim = affine_rank(uniq);

  if (h.affine_dim <= 1) {
    if (h.affine_dim == 0) {
      for (std::size_t axis = 0; axis < 3; ++axis) {
        Vec e(3, Rat(0));
        e[axis] = 1;
        h.facets.push_back(make_facet(e, x[0][axis]));
        h.facets.push_back(make_facet(vec_neg(e), -x[0][axis]));
      }
      h.vertices = {0};
    } else {
      Vec w = canonical_ray(vec_sub(uniq.back(), uniq.front()));
      add_span_equalities(h, x, Mat{w});
      Rat lo = dot(w, x[0]), hi = lo;
      std::size_t ilo = 0, ihi = 0;
      for (std::size_t i = 1; i < x.n(); ++i) {
        Rat t = dot(w, x[i]);
        if (t < lo) { lo = t; ilo = i; }
        if (t > hi) { hi = t; ihi = i; }
      }
      h.facets.push_back(make_facet(w, hi));
      h.facets.push_back(make_facet(vec_neg(w), -lo));
      h.vertices = {ilo, ihi};
    }
  } else if (h.affine_dim == 2) {
    Mat diffs;
    for (std::size_t i = 1; i < uniq.size(); ++i) diffs.push_back(vec_sub(uniq[i], uniq[0]));
    Vec nrm = null_vector(diffs, 3);
    if (nrm.empty()) {
      // rank 2 guarantees a unique normal once we keep two independent rows
      Mat two;
      for (const auto& r : diffs) {
        Mat probe = two;
        probe.push_back(r);
        if (rank(probe) > rank(two)) two.push_back(r);
        if (two.size() == 2) break;
      }
      nrm = null_vector(two, 3);
    }
    Rat c = dot(nrm, x[0]);
    h.facets.push_back(make_facet(nrm, c));
    h.facets.push_back(make_facet(vec_neg(nrm), -c));
    ComplementBasis basis = complement_basis(Direction(nrm));
    std::vector<Vec> flat;
    flat.reserve(uniq.size());
    for (const Vec& p : uniq) flat.push_back({dot(basis.columns[0], p), dot(basis.columns[1], p)});
    std::vector<Vec> ccw = hull2d_ccw(flat);
    for (std::size_t i = 0; i < ccw.size(); ++i) {
      const Vec& a = ccw[i];
      const Vec& b = ccw[(i + 1) % ccw.size()];
      Vec edge2 = vec_sub(b, a);
      Vec out2 = {edge2[1], -edge2[0]};
      Vec normal3 = vec_add(vec_scale(out2[0], basis.columns[0]), vec_scale(out2[1], basis.columns[1]));
      h.facets.push_back(make_facet(normal3, dot(out2, a)));
    }
    for (const Vec& fv : ccw) {
      for (std::size_t i = 0; i < x.n(); ++i) {
        if (Vec{dot(basis.columns[0], x[i]), dot(basis.columns[1], x[i])} == fv) {
          h.vertices.push_back(i);
          break;
        }
      }
    }
  } else {
    // Supporting-plane enumeration over all triples; n is small by contract.
    std::map<std::pair<Vec, Rat>, HullFacet> facets;
    const std::size_t m = uniq.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) {
          Vec nrm = cross3(vec_sub(uniq[j], uniq[i]), vec_sub(uniq[k], uniq[i]));
          if (is_zero_vec(nrm)) continue;
          Rat off = dot(nrm, uniq[i]);
          bool any_above = false, any_below = false;
          for (const Vec& p : uniq) {
            int s = sign(dot(nrm, p) - off);
            if (s > 0) any_above = true;
            if (s < 0) any_below = true;
            if (any_above && any_below) break;
          }
          if (any_above && any_below) continue;
          Vec onrm = any_above ? vec_neg(nrm) : nrm;
          Rat ooff = any_above ? Rat(-off) : off;
          HullFacet f = make_facet(onrm, ooff);
          facets.emplace(std::make_pair(f.normal, f.offset), f);
        }
    for (auto& [key, f] : facets) h.facets.push_back(f);
    // A vertex lies on at least three facets whose normals span space.
    for (std::size_t i = 0; i < x.n(); ++i) {
      Mat on;
      for (const auto& f : h.facets)
        if (dot(f.normal, x[i]) == f.offset) on.push_back(f.normal);
      if (on.size() >= 3 && rank(on) == 3) {
        bool dup = false;
        for (auto v : h.vertices) dup = dup || x[v] == x[i];
        if (!dup) h.vertices.push_back(i);
      }
    }
  }
  for (auto i : h.vertices) h.vertex_points.push_back(x[i]);
  for (auto& f : h.facets) fill_incident(f, x);
  return h;
}

}  // namespace

PointSet::PointSet(std::vector<Vec> pts) : points(std::move(pts)) {
  if (points.empty()) throw EmptySample();
  const std::size_t d = points[0].size();
  if (d == 0) throw DimensionMismatch("zero-dimensional point");
  for (const Vec& p : points)
    if (p.size() != d) throw DimensionMismatch("ragged point set");
}

bool PointSet::has_duplicates() const {
  std::vector<Vec> s(points);
  std::sort(s.begin(), s.end(), [](const Vec& a, const Vec& b) { return compare_lex(a, b) < 0; });
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

Direction::Direction(const Vec& v) : coords(canonical_ray(v)) {
  if (is_zero_vec(coords)) throw std::invalid_argument("zero direction");
}

bool is_general_position(const PointSet& x) {
  if (x.n() == 0) throw EmptySample();
  const std::size_t d = x.dim();
  if (x.n() >= 2 && x.has_duplicates()) return false;
  if (x.n() <= d) return affine_rank(x.points) == static_cast<int>(x.n()) - 1;
  auto idx = first_combination(d + 1);
  do {
    std::vector<Vec> sub;
    sub.reserve(d + 1);
    for (auto i : idx) sub.push_back(x[i]);
    if (affine_rank(sub) != static_cast<int>(d)) return false;
  } while (next_combination(idx, x.n()));
  return true;
}

std::vector<Direction> hyperplane_normals(const PointSet& x) {
  const std::size_t d = x.dim();
  if (x.n() < d) throw Error("hyperplane_normals: need n >= d");
  std::vector<Direction> out;
  if (d == 1) {
    out.assign(x.n(), Direction(Vec{Rat(1)}));
    return out;
  }
  auto idx = first_combination(d);
  do {
    Mat diffs;
    diffs.reserve(d - 1);
    for (std::size_t i = 1; i < d; ++i) diffs.push_back(vec_sub(x[idx[i]], x[idx[0]]));
    Vec nrm = d == 2 ? perp2(diffs[0]) : cross3(diffs[0], diffs[1]);
    if (is_zero_vec(nrm)) throw DegenerateSubset("affinely dependent d-subset");
    out.emplace_back(canonical_line(nrm));
  } while (next_combination(idx, x.n()));
  return out;
}

Direction pick_generic_direction(const PointSet& x, std::uint64_t seed) {
  const std::size_t d = x.dim();
  if (d == 1) return Direction(Vec{Rat(1)});
  std::vector<Direction> normals;
  if (x.n() >= d) normals = hyperplane_normals(x);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const long bound = 997 + 1000L * attempt;
    Vec u(d);
    for (auto& c : u) {
      long v = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
      c = v;
    }
    if (is_zero_vec(u)) continue;
    bool ok = true;
    for (const auto& mu : normals)
      if (dot(u, mu.coords) == 0) { ok = false; break; }
    if (ok) return Direction(u);
  }
  throw ExhaustedCandidates("no generic direction found; input looks pathological");
}

ComplementBasis complement_basis(const Direction& u) {
  const std::size_t d = u.dim();
  std::size_t p = 0;
  while (p < d && u.coords[p] == 0) ++p;
  ComplementBasis b;
  b.direction = u.coords;
  for (std::size_t i = 0; i < d; ++i) {
    if (i == p) continue;
    Vec col(d, Rat(0));
    col[i] = u.coords[p];
    col[p] = -u.coords[i];
    b.columns.push_back(std::move(col));
  }
  return b;
}

Vec project_point(const Vec& p, const ComplementBasis& b) {
  Vec out;
  out.reserve(b.columns.size());
  for (const Vec& col : b.columns) out.push_back(dot(col, p));
  return out;
}

PointSet project(const PointSet& x, const ComplementBasis& b) {
  if (!b.columns.empty() && b.columns[0].size() != x.dim())
    throw DimensionMismatch("basis does not match point set");
  std::vector<Vec> pts;
  pts.reserve(x.n());
  for (const Vec& p : x.points) pts.push_back(project_point(p, b));
  return PointSet(std::move(pts));
}

Vec lift_point(const Vec& q, const ComplementBasis& b) {
  const std::size_t k = b.columns.size();
  if (q.size() != k) throw DimensionMismatch("lift_point: wrong projected dimension");
  Mat gram(k, Vec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(b.columns[i], b.columns[j]);
  Vec w;
  if (!solve_linear(gram, q, w)) throw Error("lift_point: basis Gram matrix singular");
  Vec y(b.columns[0].size(), Rat(0));
  for (std::size_t j = 0; j < k; ++j) y = vec_add(y, vec_scale(w[j], b.columns[j]));
  return y;
}

ConvexHull convex_hull(const PointSet& x) {
  switch (x.dim()) {
    case 1: return hull_1d(x);
    case 2: return hull_2d(x);
    case 3: return hull_3d(x);
    default: throw UnsupportedDimension("convex_hull supports d in {1,2,3}");
  }
}

Containment hull_contains(const ConvexHull& h, const Vec& p) {
  if (p.size() != h.dim) throw DimensionMismatch("hull_contains: point dimension");
  bool on_boundary = false;
  for (const auto& f : h.facets) {
    int s = sign(dot(f.normal, p) - f.offset);
    if (s > 0) return Containment::Outside;
    if (s == 0) on_boundary = true;
  }
  return on_boundary ? Containment::Boundary : Containment::Interior;
}

std::vector<Vec> line_hull_intersection(const ConvexHull& h, const Vec& base, const Direction& dir) {
  if (base.size() != h.dim || dir.dim() != h.dim)
    throw DimensionMismatch("line_hull_intersection: dimensions");
  bool lo_set = false, hi_set = false;
  Rat lo, hi;
  for (const auto& f : h.facets) {
    Rat a = dot(f.normal, dir.coords);
    Rat b = f.offset - dot(f.normal, base);
    if (a == 0) {
      if (b < 0) return {};
      continue;
    }
    Rat t = b / a;
    if (a > 0) {
      if (!hi_set || t < hi) { hi = t; hi_set = true; }
    } else {
      if (!lo_set || t > lo) { lo = t; lo_set = true; }
    }
  }
  if (!lo_set || !hi_set) throw Error("line_hull_intersection: unbounded clip");
  if (lo > hi) return {};
  std::vector<Vec> out;
  out.push_back(vec_add(base, vec_scale(lo, dir.coords)));
  if (lo != hi) out.push_back(vec_add(base, vec_scale(hi, dir.coords)));
  return out;
}

}  // namespace hsm
