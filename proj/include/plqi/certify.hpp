#pragma once

#include <cstdint>
#include <optional>

#include "plqi/pl_map.hpp"

namespace plqi {

enum class ConvexityHint { Auto, Assume, None };

// Explicit bi-Lipschitz certificate for a simplicial homeomorphism:
// measured vertex-ratio bound M and angle margin theta, with the derived
// per-simplex constant k = M * (N1(theta)^2)^(n-1) * sqrt(6)^(n-2).
// The global constant is only claimed when the source carrier is convex,
// since the chaining argument walks straight segments through the carrier.
struct PLDeltaCertificate {
  int n = 0;
  double m_obs = 1.0;
  double m_bound = 1.0;           // m_obs inflated to restore strictness
  std::optional<double> theta;    // empty when no facet pairs exist
  std::optional<double> n1;
  std::optional<double> big_n;    // n1^2
  double k_simplex = 1.0;
  std::optional<double> k_global;
  bool convex_carrier = false;
};

// N1 = 1 + cot(theta/2) + cos^2(theta/2)/sin(theta/2), theta in (0, pi/2].
// Throws ThetaOutOfRange.
double n1_constant(double theta);

// Per-simplex bi-Lipschitz constant: M for n = 1, otherwise
// M * (N1^2)^(n-1) * 6^((n-2)/2). Requires M >= 1.
double prop31_bound(double m, double theta, int n);

// Max over maximal source simplices and vertex pairs of max(r, 1/r) with
// r the image/source edge-length ratio. Throws DegenerateEdge.
double vertex_ratio_bound(const SimplicialMap& m);

PLDeltaCertificate certify(const SimplicialMap& m,
                           ConvexityHint hint = ConvexityHint::Auto,
                           std::uint64_t seed = 0);

struct TriangleCheckReport {
  double theta = 0.0;
  double n1 = 0.0;
  std::uint64_t seed = 0;
  int trials = 0;
  int violations = 0;
  double max_lhs_over_rhs = 0.0;  // max of (a+b) / (N1*c)
  bool pass() const { return violations == 0; }
};

// Randomized check of the triangle bound a + b <= N1(theta) * c over
// triangles with the angle opposite c in [theta, pi - theta] and sides
// spanning four orders of magnitude.
TriangleCheckReport triangle_inequality_check(double theta, int trials,
                                              std::uint64_t seed);

}  // namespace plqi
