#include "plqi/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plqi/rng.hpp"

namespace plqi {

namespace {

constexpr double kMinPairDistance = 1e-12;
constexpr double kGridRatio = 1.01;

Vec sample_carrier_point(const Complex& c, Rng& rng) {
  const int id = rng.uniform_int(c.simplex_count());
  const Simplex& s = c.realize(id);
  return point_from_barycentric({rng.dirichlet_uniform(s.dim() + 1), 0.0}, s);
}

// One point pair for sample index i; deterministic given (plan.seed, i).
std::pair<Vec, Vec> draw_pair(const MapUnderTest& m, const SamplePlan& plan,
                              std::uint64_t index) {
  Rng rng = Rng::substream(plan.seed, index);
  const int within_count = static_cast<int>(
      std::llround(plan.within_simplex_fraction * plan.pair_count));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec x, y;
    if (m.is_pl()) {
      const Complex& src = m.pl_map().source();
      if (static_cast<int>(index) < within_count) {
        const int id = rng.uniform_int(src.simplex_count());
        const Simplex& s = src.realize(id);
        x = point_from_barycentric({rng.dirichlet_uniform(s.dim() + 1), 0.0}, s);
        y = point_from_barycentric({rng.dirichlet_uniform(s.dim() + 1), 0.0}, s);
      } else {
        x = sample_carrier_point(src, rng);
        y = sample_carrier_point(src, rng);
      }
    } else {
      const BallRegion& ball = m.region();
      if (index % 2 == 0) {
        x = rng.in_ball(ball.center, ball.radius);
        y = rng.in_ball(ball.center, ball.radius);
      } else {
        x = rng.in_shell(ball.center, 0.9 * ball.radius, ball.radius);
        y = rng.in_shell(ball.center, 0.9 * ball.radius, ball.radius);
      }
    }
    if ((x - y).norm() >= kMinPairDistance) return {x, y};
  }
  throw EvaluationFailure("pair sampling kept drawing coincident points");
}

double pair_ratio(const MapUnderTest& m, const Vec& x, const Vec& y) {
  try {
    const Vec fx = m.evaluate(x);
    const Vec fy = m.evaluate(y);
    return (fx - fy).norm() / (x - y).norm();
  } catch (const Error& e) {
    std::ostringstream os;
    os << "evaluation failed at sampled pair (" << x.transpose() << ") / ("
       << y.transpose() << "): " << e.what();
    throw EvaluationFailure(os.str());
  }
}

// Smallest M with (1/M) d - M <= d' <= M d + M for one pair.
double required_qi_constant(double d, double d_image) {
  const double upper = d_image / (d + 1.0);
  const double lower = (-d_image + std::sqrt(d_image * d_image + 4.0 * d)) / 2.0;
  return std::max(upper, lower);
}

double grid_round_up(double m_star) {
  if (m_star <= 1.0) return 1.0;
  const double steps = std::ceil(std::log(m_star) / std::log(kGridRatio) - 1e-12);
  return std::pow(kGridRatio, steps);
}

double qi_estimate_for_plan(const MapUnderTest& m, const SamplePlan& plan) {
  double m_star = 0.0;
  for (int i = 0; i < plan.pair_count; ++i) {
    const auto [x, y] = draw_pair(m, plan, static_cast<std::uint64_t>(i));
    double d_image;
    try {
      d_image = (m.evaluate(x) - m.evaluate(y)).norm();
    } catch (const Error& e) {
      throw EvaluationFailure(e.what());
    }
    m_star = std::max(m_star, required_qi_constant((x - y).norm(), d_image));
  }
  return grid_round_up(m_star);
}

}  // namespace

MapUnderTest MapUnderTest::pl(SimplicialMap m) {
  MapUnderTest out;
  out.pl_ = std::move(m);
  return out;
}

MapUnderTest MapUnderTest::analytic(AnalyticMap f, BallRegion region) {
  if (static_cast<int>(region.center.size()) != f.dim())
    throw Error("region center dimension does not match the map");
  if (!(region.radius > 0.0)) throw Error("region radius must be positive");
  MapUnderTest out;
  out.analytic_ = std::move(f);
  out.region_ = std::move(region);
  return out;
}

MapUnderTest MapUnderTest::callable(std::function<Vec(const Vec&)> fn,
                                    BallRegion region) {
  if (!fn) throw Error("callable map is empty");
  if (!(region.radius > 0.0)) throw Error("region radius must be positive");
  MapUnderTest out;
  out.fn_ = std::move(fn);
  out.region_ = std::move(region);
  return out;
}

Vec MapUnderTest::evaluate(const Vec& x) const {
  if (is_pl()) return pl_->evaluate(x);
  if (analytic_) return analytic_->evaluate(x);
  return fn_(x);
}

int MapUnderTest::ambient_dim() const {
  if (is_pl()) return pl_->source().ambient_dim();
  return static_cast<int>(region_->center.size());
}

MapUnderTest MapUnderTest::with_region_radius(double radius) const {
  if (!region_.has_value())
    throw Error("with_region_radius: map has no ball region");
  MapUnderTest out = *this;
  out.region_->radius = radius;
  return out;
}

DistortionReport sample_distortion(const MapUnderTest& m,
                                   const SamplePlan& plan) {
  if (plan.pair_count < 1) throw Error("sample_distortion: pair_count >= 1");
  DistortionReport report;
  report.seed = plan.seed;
  report.pair_count = plan.pair_count;
  report.min_ratio = std::numeric_limits<double>::infinity();
  report.max_ratio = -std::numeric_limits<double>::infinity();

  for (int i = 0; i < plan.pair_count; ++i) {
    const auto [x, y] = draw_pair(m, plan, static_cast<std::uint64_t>(i));
    const double ratio = pair_ratio(m, x, y);
    if (ratio < report.min_ratio) {
      report.min_ratio = ratio;
      report.argmin = {x, y, ratio};
    }
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.argmax = {x, y, ratio};
    }
  }
  return report;
}

QIEstimate qi_constants(const MapUnderTest& m, const SamplePlan& plan,
                        double cap) {
  QIEstimate est;
  est.cap = cap;

  if (m.is_pl()) {
    est.m_hat = qi_estimate_for_plan(m, plan);
  } else {
    // Nested radial strata R/100, R/10, R; the outermost stratum samples
    // the full declared ball and provides the headline estimate.
    const double radius = m.region().radius;
    for (double divisor : {100.0, 10.0, 1.0}) {
      MapUnderTest stratum = m.with_region_radius(radius / divisor);
      SamplePlan stratum_plan = plan;
      stratum_plan.seed = Rng::substream(plan.seed,
                                         static_cast<std::uint64_t>(divisor))
                              .next_u64();
      est.strata.emplace_back(radius / divisor,
                              qi_estimate_for_plan(stratum, stratum_plan));
    }
    est.m_hat = est.strata.back().second;

    bool growing = est.m_hat > 10.0;
    for (size_t i = 1; i < est.strata.size() && growing; ++i)
      growing = est.strata[i].second >= 3.0 * est.strata[i - 1].second;
    if (growing) est.finite = false;
  }

  if (est.m_hat > cap) est.finite = false;
  return est;
}

std::vector<std::pair<double, double>> equivalence_gap(
    const AnalyticMap& f, const AnalyticMap& g, const Vec& center,
    const std::vector<double>& radii, int samples_per_radius,
    std::uint64_t seed) {
  if (f.dim() != g.dim() || static_cast<int>(center.size()) != f.dim())
    throw Error("equivalence_gap: dimension mismatch");
  for (size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1]))
      throw Error("equivalence_gap: radii must be increasing");

  std::vector<std::pair<double, double>> out;
  double sup = 0.0;
  for (size_t j = 0; j < radii.size(); ++j) {
    for (int i = 0; i < samples_per_radius; ++i) {
      Rng rng = Rng::substream(
          seed, static_cast<std::uint64_t>(j) * samples_per_radius + i);
      // Half the samples hug the boundary where the sup concentrates.
      const Vec x = (i % 2 == 0)
                        ? rng.in_ball(center, radii[j])
                        : rng.in_shell(center, 0.9 * radii[j], radii[j]);
      sup = std::max(sup, (f.evaluate(x) - g.evaluate(x)).norm());
    }
    out.emplace_back(radii[j], sup);  // nested: sup carries over
  }
  return out;
}

BoundCheckResult bound_check(const DistortionReport& report, double k,
                             double slack) {
  if (!(k >= 1.0)) throw Error("bound_check: k must be >= 1");
  BoundCheckResult out;
  out.margin =
      std::max(1.0 / k - report.min_ratio, report.max_ratio - k);
  out.pass = out.margin <= slack;
  return out;
}

}  // namespace plqi
