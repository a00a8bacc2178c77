#include "hsmedian/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace hsm {

namespace {

int half_of(const Vec& v) {
  if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
  return 1;
}

Rat cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

std::vector<Vec> dedupe_rays(std::vector<Vec> rays) {
  for (auto& r : rays) r = canonical_ray(r);
  std::sort(rays.begin(), rays.end(),
            [](const Vec& a, const Vec& b) { return compare_lex(a, b) < 0; });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

std::vector<Vec> dedupe_lines(std::vector<Vec> vs) {
  for (auto& v : vs) v = canonical_line(v);
  std::sort(vs.begin(), vs.end(),
            [](const Vec& a, const Vec& b) { return compare_lex(a, b) < 0; });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Interior direction of the counterclockwise gap from a to b, decided in
// planar coordinates but assembled from the caller's ambient vectors.
// `perp_ccw` must rotate an ambient in-plane vector a quarter turn ccw.
template <typename PerpFn>
Vec gap_rep(const Vec& a2, const Vec& b2, const Vec& a3, const Vec& b3, PerpFn perp_ccw) {
  int c = sign(cross2(a2, b2));
  if (c > 0) return vec_add(a3, b3);
  if (c < 0) return vec_neg(vec_add(a3, b3));
  return perp_ccw(a3);  // gap of exactly half a turn
}

}  // namespace

int compare_angular(const Vec& a, const Vec& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb ? -1 : 1;
  return -sign(cross2(a, b));
}

ArcSubdivision subdivide_circle(const std::vector<Vec>& mark_dirs) {
  ArcSubdivision out;
  out.marks = dedupe_rays(mark_dirs);
  std::sort(out.marks.begin(), out.marks.end(),
            [](const Vec& a, const Vec& b) { return compare_angular(a, b) < 0; });
  if (out.marks.empty()) {
    out.gap_reps.push_back({Rat(1), Rat(0)});
    return out;
  }
  const std::size_t m = out.marks.size();
  if (m == 1) {
    out.gap_reps.push_back(vec_neg(out.marks[0]));
    return out;
  }
  auto perp_ccw = [](const Vec& v) { return perp2(v); };
  for (std::size_t i = 0; i < m; ++i) {
    const Vec& a = out.marks[i];
    const Vec& b = out.marks[(i + 1) % m];
    out.gap_reps.push_back(gap_rep(a, b, a, b, perp_ccw));
  }
  return out;
}

std::vector<Vec> circle_cells(const std::vector<Vec>& normals) {
  std::vector<Vec> marks;
  marks.reserve(2 * normals.size());
  for (const Vec& v : normals) {
    Vec p = perp2(v);
    marks.push_back(p);
    marks.push_back(vec_neg(p));
  }
  return subdivide_circle(marks).gap_reps;
}

namespace {

// Sorts ambient in-plane vectors by their exact planar angle, dropping
// directional repeats. coords() must be a positively-scaled linear chart.
struct PlanarFan {
  std::vector<Vec> ambient;
  std::vector<Vec> planar;

  template <typename CoordFn>
  PlanarFan(const std::vector<Vec>& dirs, CoordFn coords) {
    std::vector<std::size_t> order(dirs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<Vec> cs(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) cs[i] = coords(dirs[i]);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return compare_angular(cs[a], cs[b]) < 0;
    });
    for (std::size_t k : order) {
      if (!planar.empty() && compare_angular(planar.back(), cs[k]) == 0) continue;
      ambient.push_back(dirs[k]);
      planar.push_back(cs[k]);
    }
  }
};

}  // namespace

SphereStrata sphere_strata(const std::vector<Vec>& normals, bool with_boundary_strata) {
  SphereStrata out;
  std::vector<Vec> circles = dedupe_lines(normals);
  circles.erase(std::remove_if(circles.begin(), circles.end(),
                               [](const Vec& v) { return is_zero_vec(v); }),
                circles.end());

  if (circles.empty()) {
    out.cell_reps.push_back({Rat(1), Rat(0), Rat(0)});
    return out;
  }
  if (circles.size() == 1) {
    const Vec& c = circles[0];
    out.cell_reps.push_back(c);
    out.cell_reps.push_back(vec_neg(c));
    if (with_boundary_strata) {
      Vec f1 = {c[1], -c[0], Rat(0)};
      if (is_zero_vec(f1)) f1 = {Rat(0), c[2], -c[1]};
      Vec f2 = cross3(c, f1);
      out.vertices = {canonical_ray(f1), canonical_ray(vec_neg(f1))};
      out.arc_reps = {canonical_ray(f2), canonical_ray(vec_neg(f2))};
    }
    return out;
  }

  std::vector<Vec> vertices;
  for (std::size_t i = 0; i < circles.size(); ++i)
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      Vec c = cross3(circles[i], circles[j]);
      assert(!is_zero_vec(c));
      vertices.push_back(c);
      vertices.push_back(vec_neg(c));
    }
  vertices = dedupe_rays(std::move(vertices));
  out.vertices = vertices;

  // One representative for every cell incident to every vertex. Each full
  // cell of an arrangement of two or more circles has a vertex on its
  // boundary, so the union covers all cells; the sign-vector map removes
  // duplicates across vertices.
  std::map<std::vector<int>, Vec> by_sign;
  for (const Vec& v : vertices) {
    std::vector<Vec> tangents;
    for (const Vec& m : circles) {
      if (dot(v, m) != 0) continue;
      Vec t = cross3(v, m);
      tangents.push_back(t);
      tangents.push_back(vec_neg(t));
    }
    assert(tangents.size() >= 4);
    Vec f1 = tangents[0];
    Vec f2 = cross3(v, f1);
    auto coords = [&](const Vec& w) { return Vec{dot(w, f1), dot(w, f2)}; };
    auto perp_ccw = [&](const Vec& w) {
      Vec p = cross3(v, w);
      if (cross2(coords(w), coords(p)) < 0) p = vec_neg(p);
      return p;
    };
    PlanarFan fan(tangents, coords);

    const std::size_t g = fan.ambient.size();
    for (std::size_t i = 0; i < g; ++i) {
      Vec p3 = gap_rep(fan.planar[i], fan.planar[(i + 1) % g], fan.ambient[i],
                       fan.ambient[(i + 1) % g], perp_ccw);
      // Largest step that keeps the sign against every other circle fixed.
      bool have_t = false;
      Rat t = 1;
      for (const Vec& m : circles) {
        Rat cv = dot(v, m);
        if (cv == 0) continue;
        Rat pm = dot(p3, m);
        if (pm == 0) continue;
        Rat cand = rat_abs(cv) / (2 * rat_abs(pm));
        if (!have_t || cand < t) { t = cand; have_t = true; }
      }
      Vec rep = vec_add(v, vec_scale(t, p3));
      std::vector<int> sig(circles.size());
      bool interior = true;
      for (std::size_t ci = 0; ci < circles.size(); ++ci) {
        sig[ci] = sign(dot(rep, circles[ci]));
        if (sig[ci] == 0) { interior = false; break; }
      }
      assert(interior);
      if (interior) by_sign.emplace(std::move(sig), canonical_ray(rep));
    }
  }
  out.cell_reps.reserve(by_sign.size());
  for (auto& [sig, rep] : by_sign) out.cell_reps.push_back(rep);

  if (with_boundary_strata) {
    for (const Vec& m : circles) {
      std::vector<Vec> on;
      for (const Vec& v : vertices)
        if (dot(v, m) == 0) on.push_back(v);
      assert(on.size() >= 2);
      Vec f1 = on[0];
      Vec f2 = cross3(m, f1);
      auto coords = [&](const Vec& w) { return Vec{dot(w, f1), dot(w, f2)}; };
      auto perp_ccw = [&](const Vec& w) {
        Vec p = cross3(m, w);
        if (cross2(coords(w), coords(p)) < 0) p = vec_neg(p);
        return p;
      };
      PlanarFan fan(on, coords);
      const std::size_t g = fan.ambient.size();
      for (std::size_t i = 0; i < g; ++i) {
        out.arc_reps.push_back(gap_rep(fan.planar[i], fan.planar[(i + 1) % g], fan.ambient[i],
                                       fan.ambient[(i + 1) % g], perp_ccw));
      }
    }
    out.arc_reps = dedupe_rays(std::move(out.arc_reps));
  }
  return out;
}

}  // namespace hsm
