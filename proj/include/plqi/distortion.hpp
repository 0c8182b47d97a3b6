#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "plqi/analytic.hpp"
#include "plqi/pl_map.hpp"

namespace plqi {

struct BallRegion {
  Vec center;
  double radius = 1.0;
};

// A map paired with its sampling region: a simplicial map sampled over its
// source carrier, or an analytic map sampled over a ball. Arbitrary
// callables are accepted too so that negative controls outside the
// analytic catalog (quadratic stretches and the like) can be put under
// the same instruments.
class MapUnderTest {
 public:
  static MapUnderTest pl(SimplicialMap m);
  static MapUnderTest analytic(AnalyticMap f, BallRegion region);
  static MapUnderTest callable(std::function<Vec(const Vec&)> fn,
                               BallRegion region);

  bool is_pl() const { return pl_.has_value(); }
  const SimplicialMap& pl_map() const { return *pl_; }
  const AnalyticMap& analytic_map() const { return *analytic_; }
  const BallRegion& region() const { return *region_; }

  Vec evaluate(const Vec& x) const;
  int ambient_dim() const;

  // Same map over a concentric ball of a different radius (region modes).
  MapUnderTest with_region_radius(double radius) const;

 private:
  MapUnderTest() = default;
  std::optional<SimplicialMap> pl_;
  std::optional<AnalyticMap> analytic_;
  std::function<Vec(const Vec&)> fn_;
  std::optional<BallRegion> region_;
};

// Everything random is keyed by (seed, pair index): reports are
// bit-identical for identical inputs regardless of evaluation order.
struct SamplePlan {
  std::uint64_t seed = 0;
  int pair_count = 1000;
  // PL mode: fraction of pairs drawn inside a single carrier simplex; the
  // rest pick their two carriers independently. Analytic mode alternates
  // whole-ball pairs with boundary-shell pairs.
  double within_simplex_fraction = 0.5;
};

struct WitnessPair {
  Vec x, y;
  double ratio = 1.0;
};

struct DistortionReport {
  std::uint64_t seed = 0;
  int pair_count = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  WitnessPair argmin, argmax;
};

// Min/max of d(f(x), f(y)) / d(x, y) over sampled pairs, with witnesses.
// Pairs closer than 1e-12 are rejected and redrawn.
DistortionReport sample_distortion(const MapUnderTest& m,
                                   const SamplePlan& plan);

// Smallest constant on the 1.01-ratio grid such that every sampled pair
// satisfies (1/M) d - M <= d' <= M d + M. `finite` is false when the
// estimate exceeds `cap`, or (ball mode) when the per-stratum estimates on
// nested balls keep growing proportionally with the radius instead of
// stabilizing: at a bounded sampling scale that growth, not the absolute
// size, is the empirical signature of a non-quasi-isometry.
struct QIEstimate {
  double m_hat = 1.0;
  bool finite = true;
  double cap = 1e6;
  std::vector<std::pair<double, double>> strata;  // (radius, m_hat)
};

QIEstimate qi_constants(const MapUnderTest& m, const SamplePlan& plan,
                        double cap = 1e6);

// Per-radius sup of d(f(x), g(x)) over nested boundary-biased samples;
// nondecreasing in the radius by construction.
std::vector<std::pair<double, double>> equivalence_gap(
    const AnalyticMap& f, const AnalyticMap& g, const Vec& center,
    const std::vector<double>& radii, int samples_per_radius,
    std::uint64_t seed);

struct BoundCheckResult {
  bool pass = false;
  double margin = 0.0;  // largest violation; <= slack means pass
};

// Pass iff [min_ratio, max_ratio] is contained in [1/k - slack, k + slack].
BoundCheckResult bound_check(const DistortionReport& report, double k,
                             double slack = kCheckSlack);

}  // namespace plqi
