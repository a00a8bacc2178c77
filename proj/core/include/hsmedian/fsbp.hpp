#pragma once

#include <cstdint>

#include "hsmedian/depth.hpp"

namespace hsm {

enum class FsbpMethod { ClosedFormD2, ArrangementD3, RandomizedUpperBound };

std::string to_string(FsbpMethod m);

// A direction sphere fragment: maximal region where the signs against all
// sample hyperplane normals are constant. The projected maximum depth is
// constant on fragments, so one interior representative decides the value.
struct FragmentSample {
  Direction representative;
  long lambda_count = 0;
};

// The breakdown certificate: the minimizing direction u0, the count
// k = n * min_u lambda*(X_u), epsilon = k/(n+k), and the a-priori bounds.
struct FsbpCertificate {
  std::size_t n = 0;
  std::size_t d = 0;
  long k = 0;
  Rat epsilon;
  Direction u0;
  FsbpMethod method = FsbpMethod::ClosedFormD2;
  Rat prop_lower;
  Rat prop_upper;
  bool singleton_case = false;
};

// Maximum depth count of the projection of X along the complement of u.
DepthValue lambda_star_projected(const PointSet& x, const Direction& u);

// One interior representative per fragment with its projected maximum depth.
// Exact enumeration for d = 3.
std::vector<FragmentSample> fragment_survey(const PointSet& x);

struct MinProjectedLambda {
  Direction u0;
  long k = 0;
  FsbpMethod method = FsbpMethod::ClosedFormD2;
};

// inf_u lambda*(X_u): closed form for d=2, fragment enumeration for d=3,
// seeded randomized upper bound for d=4.
MinProjectedLambda min_projected_lambda(const PointSet& x);

// Seeded search over coordinate-pair and random directions; each evaluated
// value is exact, so the minimum found is an upper bound on the infimum.
MinProjectedLambda min_projected_lambda_randomized(const PointSet& x, std::uint64_t seed,
                                                   int tries);

struct FsbpBounds {
  Rat lower;
  Rat upper;
  bool singleton_case = false;
};

// lower = ceil(n/d)/(n+ceil(n/d)); upper depends on whether some admissible
// direction yields a singleton projected maximum-depth region.
FsbpBounds fsbp_bounds(const PointSet& x);

FsbpCertificate fsbp_certificate(const PointSet& x);

}  // namespace hsm
