#include "plqi/certify.hpp"

#include <algorithm>
#include <cmath>

#include "plqi/rng.hpp"

namespace plqi {

namespace {

constexpr double kStrictnessInflation = 1e-6;

// Convexity probe: midpoints of cross-simplex point pairs must stay in the
// carrier. Sampling refutes convexity; it cannot prove it, so the result is
// only used to decide whether the global chaining constant is claimed.
bool carrier_convex_by_sampling(const Complex& c, std::uint64_t seed,
                                int trials) {
  if (c.simplex_count() == 1) return true;  // single simplex hull
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
    const int sa = rng.uniform_int(c.simplex_count());
    const int sb = rng.uniform_int(c.simplex_count());
    const Simplex& a = c.realize(sa);
    const Simplex& b = c.realize(sb);
    Vec wa = rng.dirichlet_uniform(a.dim() + 1);
    Vec wb = rng.dirichlet_uniform(b.dim() + 1);
    Vec pa = point_from_barycentric({wa, 0.0}, a);
    Vec pb = point_from_barycentric({wb, 0.0}, b);
    if (!c.locate(0.5 * (pa + pb)).has_value()) return false;
  }
  return true;
}

}  // namespace

double n1_constant(double theta) {
  if (!(theta > 0.0) || theta > M_PI / 2.0 + 1e-15)
    throw ThetaOutOfRange("n1_constant: theta must lie in (0, pi/2]");
  const double half = theta / 2.0;
  const double c = std::cos(half);
  const double s = std::sin(half);
  return 1.0 + c / s + c * c / s;
}

double prop31_bound(double m, double theta, int n) {
  if (n < 1) throw Error("prop31_bound: dimension must be >= 1");
  if (m < 1.0) throw Error("prop31_bound: M must be >= 1");
  if (n == 1) return m;
  const double n1 = n1_constant(theta);
  const double big_n = n1 * n1;
  return m * std::pow(big_n, n - 1) * std::pow(6.0, (n - 2) / 2.0);
}

double vertex_ratio_bound(const SimplicialMap& m) {
  double worst = 1.0;
  const Complex& src = m.source();
  const Complex& tgt = m.target();
  for (int id = 0; id < src.simplex_count(); ++id) {
    const auto& ix = src.simplex(id);
    for (size_t a = 0; a < ix.size(); ++a) {
      for (size_t b = a + 1; b < ix.size(); ++b) {
        const double d_src = (src.vertex(ix[a]) - src.vertex(ix[b])).norm();
        const int img_a = m.vertex_images()[static_cast<size_t>(ix[a])];
        const int img_b = m.vertex_images()[static_cast<size_t>(ix[b])];
        const double d_tgt = (tgt.vertex(img_a) - tgt.vertex(img_b)).norm();
        if (d_src < 1e-300 || d_tgt < 1e-300)
          throw DegenerateEdge("vertex_ratio_bound: coincident vertices");
        const double r = d_tgt / d_src;
        worst = std::max(worst, std::max(r, 1.0 / r));
      }
    }
  }
  return worst;
}

PLDeltaCertificate certify(const SimplicialMap& m, ConvexityHint hint,
                           std::uint64_t seed) {
  m.require_homeomorphism();
  const ValidationReport src_report = m.source().validate();
  if (!src_report.valid())
    throw Error("certify: source complex invalid: " +
                src_report.issues.front().message);
  const ValidationReport tgt_report = m.target().validate();
  if (!tgt_report.valid())
    throw Error("certify: target complex invalid: " +
                tgt_report.issues.front().message);

  PLDeltaCertificate cert;
  cert.n = m.source().ambient_dim();
  cert.m_obs = vertex_ratio_bound(m);
  cert.m_bound = cert.m_obs * (1.0 + kStrictnessInflation);

  const AngleMargin src_margin = m.source().facet_angle_margin();
  const AngleMargin tgt_margin = m.target().facet_angle_margin();
  if (!src_margin.vacuous() || !tgt_margin.vacuous()) {
    double theta = M_PI;
    if (src_margin.theta) theta = std::min(theta, *src_margin.theta);
    if (tgt_margin.theta) theta = std::min(theta, *tgt_margin.theta);
    cert.theta = theta;
    cert.n1 = n1_constant(theta);
    cert.big_n = (*cert.n1) * (*cert.n1);
    cert.k_simplex = cert.n == 1 ? cert.m_bound
                                 : prop31_bound(cert.m_bound, theta, cert.n);
  } else {
    // No facet pairs anywhere: every simplex has dimension <= 1, where the
    // internal distortion is exactly the edge ratio.
    cert.k_simplex = cert.m_bound;
  }

  switch (hint) {
    case ConvexityHint::Assume:
      cert.convex_carrier = true;
      break;
    case ConvexityHint::None:
      cert.convex_carrier = false;
      break;
    case ConvexityHint::Auto:
      cert.convex_carrier = carrier_convex_by_sampling(m.source(), seed, 1000);
      break;
  }
  if (cert.convex_carrier) cert.k_global = cert.k_simplex;
  return cert;
}

TriangleCheckReport triangle_inequality_check(double theta, int trials,
                                              std::uint64_t seed) {
  if (!(theta > 0.0) || theta >= M_PI / 2.0)
    throw ThetaOutOfRange("triangle_inequality_check: theta in (0, pi/2)");
  TriangleCheckReport report;
  report.theta = theta;
  report.n1 = n1_constant(theta);
  report.seed = seed;
  report.trials = trials;

  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
    // C at the origin, CA along a random direction, angle BCA prescribed.
    const double dir = rng.uniform(0.0, 2.0 * M_PI);
    const double gamma = rng.uniform(theta, M_PI - theta);
    const double len_b = rng.log_uniform(1e-2, 1e2);  // |CA|
    const double len_a = rng.log_uniform(1e-2, 1e2);  // |CB|
    Vec a_pt(2), b_pt(2);
    a_pt << len_b * std::cos(dir), len_b * std::sin(dir);
    b_pt << len_a * std::cos(dir + gamma), len_a * std::sin(dir + gamma);
    const double c_len = (a_pt - b_pt).norm();
    const double lhs = len_a + len_b;
    const double rhs = report.n1 * c_len;
    report.max_lhs_over_rhs = std::max(report.max_lhs_over_rhs, lhs / rhs);
    if (lhs > rhs + kCheckSlack) report.violations += 1;
  }
  return report;
}

}  // namespace plqi
