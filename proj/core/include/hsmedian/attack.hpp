#pragma once

#include "hsmedian/fsbp.hpp"

namespace hsm {

// How the escape point was obtained. Dim0: the projected maximum-depth
// region is a single point. LowDim: a segment, handled via its midpoint plus
// a deviated-normal certificate. FullDimIterative: the dominance iteration
// converged. SearchVerified: exhaustive scan over the candidate set.
enum class EscapeScenario { Dim0, LowDim, FullDimIterative, SearchVerified };

std::string to_string(EscapeScenario s);

// A point x0 of the projected maximum-depth region such that every other
// point has an optimal halfspace whose witness direction points strictly
// past x0. The verified flag reflects the exhaustive check over the finite
// candidate set, which is the source of truth regardless of scenario.
struct EscapePoint {
  Vec point;
  EscapeScenario scenario = EscapeScenario::Dim0;
  bool verified = false;
};

// Split of max-depth candidates by whether some optimal direction of the
// candidate points strictly past the base point z.
struct DominanceAnalysis {
  Vec base;
  std::vector<Vec> candidates;
  std::vector<std::size_t> a_set;  // some witness u of x has dot(u,x) < dot(u,z)
  std::vector<std::size_t> b_set;  // no witness does; z itself always lands here
};

DominanceAnalysis dominance_sets(const Vec& z, const PointSet& x,
                                 const std::vector<Vec>& candidates);

EscapePoint find_escape_point(const PointSet& x_projected);

// m exact copies of a single exterior point y on the line through the lifted
// escape point along u0.
struct ContaminationPlan {
  Direction u0;
  Vec x0_projected;
  Vec line_base;   // lift of x0; the contamination line is {line_base + t*u0}
  Vec y;           // line_base + magnitude*u0, strictly outside the hull
  Rat magnitude;
  long m = 0;
  long cert_count = 0;  // k = n * lambda*(X_u0) from the certificate
};

struct AttackOutcome {
  DepthValue contaminated_lambda;   // at the plan magnitude
  bool lambda_exact = true;         // candidate-based for d = 3
  int region_affine_dim = -1;       // -1 where region geometry is unsupported
  std::size_t region_vertex_count = 0;
  bool y_is_deepest = false;        // at both magnitudes
  bool median_exact = true;         // false when the escaped-copy proxy is used
  bool median_outside_first = false;
  bool median_outside_second = false;
  Rat displacement_sq_first;
  Rat displacement_sq_second;
  bool broke_down = false;
};

ContaminationPlan build_attack(const PointSet& x, const Rat& magnitude, long m);
ContaminationPlan build_attack(const PointSet& x, const FsbpCertificate& cert,
                               const Rat& magnitude, long m);

AttackOutcome run_attack(const PointSet& x, const ContaminationPlan& plan);

// The boundary point z on the contamination line and the exact inequality
// (n+m) * depth(z, contaminated) >= min{k, m+1}; for m <= k-1 additionally
// checks that z dominates the exterior and the contaminated median stays in
// the hull.
struct LowerBoundTrace {
  Vec z;
  DepthValue depth_z;
  DepthValue depth_y;
  long bound_numerator = 0;  // min{k, m+1}
  bool bound_holds = false;
  bool exterior_dominated = true;
  bool median_in_hull = true;
  bool holds = false;
};

LowerBoundTrace lower_bound_trace(const PointSet& x, long m, const ContaminationPlan& plan);
bool verify_lower_bound(const PointSet& x, long m, const ContaminationPlan& plan);

// Smallest m in [1, max_m] whose constructed attack breaks the median down.
long empirical_fsbp(const PointSet& x, long max_m);

}  // namespace hsm
