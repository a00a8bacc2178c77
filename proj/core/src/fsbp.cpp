#include "hsmedian/fsbp.hpp"

#include <algorithm>
#include <random>

#include "hsmedian/arrangement.hpp"

namespace hsm {

namespace {

constexpr std::uint64_t kGenericDirectionSeed = 1;

void require_rich_sample(const PointSet& x) {
  if (x.n() < x.dim() + 1) throw Error("sample too small: need n >= d+1");
  if (!is_general_position(x)) throw NotInGeneralPosition();
}

bool satisfies_generic_condition(const Direction& u, const std::vector<Direction>& normals) {
  for (const auto& mu : normals)
    if (dot(u.coords, mu.coords) == 0) return false;
  return true;
}

Rat fsbp_fraction(long k, long n) { return Rat(k) / Rat(n + k); }

}  // namespace

std::string to_string(FsbpMethod m) {
  switch (m) {
    case FsbpMethod::ClosedFormD2: return "ClosedFormD2";
    case FsbpMethod::ArrangementD3: return "ArrangementD3";
    case FsbpMethod::RandomizedUpperBound: return "RandomizedUpperBound";
  }
  return "?";
}

DepthValue lambda_star_projected(const PointSet& x, const Direction& u) {
  if (x.dim() < 2) throw UnsupportedDimension("lambda_star_projected: need d >= 2");
  if (u.dim() != x.dim()) throw DimensionMismatch("lambda_star_projected: direction dimension");
  PointSet p = project(x, complement_basis(u));
  return {max_depth_count(p), static_cast<long>(x.n())};
}

std::vector<FragmentSample> fragment_survey(const PointSet& x) {
  if (x.dim() != 3) throw UnsupportedDimension("fragment_survey: exact enumeration needs d = 3");
  require_rich_sample(x);
  std::vector<Direction> normals = hyperplane_normals(x);
  std::vector<Vec> circles;
  circles.reserve(normals.size());
  for (const auto& mu : normals) circles.push_back(mu.coords);
  SphereStrata strata = sphere_strata(circles, false);

  std::vector<FragmentSample> out;
  out.reserve(strata.cell_reps.size() + 1);
  for (const Vec& rep : strata.cell_reps) {
    FragmentSample f;
    f.representative = Direction(rep);
    f.lambda_count = lambda_star_projected(x, f.representative).count;
    out.push_back(std::move(f));
  }
  // One extra globally generic direction; redundant when the enumeration is
  // complete but harmless, and it keeps the survey nonempty for tiny inputs.
  Direction generic = pick_generic_direction(x, kGenericDirectionSeed);
  FragmentSample g;
  g.representative = generic;
  g.lambda_count = lambda_star_projected(x, generic).count;
  out.push_back(std::move(g));
  return out;
}

MinProjectedLambda min_projected_lambda(const PointSet& x) {
  require_rich_sample(x);
  const std::size_t d = x.dim();
  if (d < 2) throw UnsupportedDimension("min_projected_lambda: need d >= 2");
  if (d == 2) {
    MinProjectedLambda r;
    r.u0 = pick_generic_direction(x, kGenericDirectionSeed);
    r.k = lambda_star_projected(x, r.u0).count;
    r.method = FsbpMethod::ClosedFormD2;
    return r;
  }
  if (d == 3) {
    std::vector<Direction> normals = hyperplane_normals(x);
    MinProjectedLambda best;
    bool have = false;
    for (const FragmentSample& f : fragment_survey(x)) {
      if (!have || f.lambda_count < best.k ||
          (f.lambda_count == best.k &&
           compare_lex(f.representative.coords, best.u0.coords) < 0)) {
        best.u0 = f.representative;
        best.k = f.lambda_count;
        have = true;
      }
    }
    best.method = FsbpMethod::ArrangementD3;
    if (!satisfies_generic_condition(best.u0, normals))
      throw Error("fragment representative unexpectedly hit a hyperplane normal");
    return best;
  }
  return min_projected_lambda_randomized(x, kGenericDirectionSeed, 64);
}

MinProjectedLambda min_projected_lambda_randomized(const PointSet& x, std::uint64_t seed,
                                                   int tries) {
  require_rich_sample(x);
  const std::size_t d = x.dim();
  if (d < 3) throw UnsupportedDimension("randomized search is for d >= 3");
  if (d > 4)
    throw UnsupportedDimension(
        "projected maximum depth is exact only for d-1 <= 3; d >= 5 is out of reach");

  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d, Rat(0));
    e[i] = 1;
    candidates.push_back(e);
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec f(d, Rat(0));
      f[i] = 1;
      f[j] = 1;
      candidates.push_back(f);
      f[j] = -1;
      candidates.push_back(f);
    }
  }
  std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbULL);
  for (int t = 0; t < tries; ++t) {
    Vec u(d);
    bool zero = true;
    for (auto& c : u) {
      long v = static_cast<long>(rng() % 19ULL) - 9;
      c = v;
      zero = zero && v == 0;
    }
    if (!zero) candidates.push_back(std::move(u));
  }

  MinProjectedLambda best;
  bool have = false;
  for (const Vec& c : candidates) {
    Direction u(c);
    long k = lambda_star_projected(x, u).count;
    if (!have || k < best.k) {
      best.u0 = u;
      best.k = k;
      have = true;
    }
  }
  best.method = FsbpMethod::RandomizedUpperBound;
  return best;
}

FsbpBounds fsbp_bounds(const PointSet& x) {
  require_rich_sample(x);
  const long n = static_cast<long>(x.n());
  const long d = static_cast<long>(x.dim());
  if (d < 2) throw UnsupportedDimension("fsbp_bounds: need d >= 2");
  FsbpBounds b;
  const long lo = ceil_div(n, d);
  b.lower = fsbp_fraction(lo, n);

  if (d == 2) {
    Direction u0 = pick_generic_direction(x, kGenericDirectionSeed);
    PointSet p = project(x, complement_basis(u0));
    DepthRegion m = depth_region_1d(p, max_depth_count(p));
    b.singleton_case = m.affine_dim == 0;
  } else if (d == 3) {
    b.singleton_case = false;
    for (const FragmentSample& f : fragment_survey(x)) {
      PointSet p = project(x, complement_basis(f.representative));
      DepthRegion m = depth_region_2d(p, max_depth_count(p));
      if (m.affine_dim == 0) {
        b.singleton_case = true;
        break;
      }
    }
  } else {
    // Singleton detection needs the projected region path (d-1 <= 2). The
    // singleton-branch value is the larger of the two, hence always valid.
    b.singleton_case = false;
    b.upper = fsbp_fraction(floor_div(n - d + 3, 2), n);
    return b;
  }
  const long up = b.singleton_case ? floor_div(n - d + 3, 2) : floor_div(n - d + 2, 2);
  b.upper = fsbp_fraction(up, n);
  return b;
}

FsbpCertificate fsbp_certificate(const PointSet& x) {
  MinProjectedLambda m = min_projected_lambda(x);
  FsbpBounds b = fsbp_bounds(x);
  FsbpCertificate cert;
  cert.n = x.n();
  cert.d = x.dim();
  cert.k = m.k;
  cert.epsilon = fsbp_fraction(m.k, static_cast<long>(x.n()));
  cert.u0 = m.u0;
  cert.method = m.method;
  cert.prop_lower = b.lower;
  cert.prop_upper = b.upper;
  cert.singleton_case = b.singleton_case;
  return cert;
}

}  // namespace hsm
