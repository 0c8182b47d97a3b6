#include <doctest.h>

#include <cmath>

#include "plqi/certify.hpp"
#include "plqi/constructions.hpp"
#include "plqi/distortion.hpp"
#include "test_util.hpp"

using namespace plqi;
using test::vec;

namespace {

MapUnderTest identity_on_ball(int n, double radius) {
  return MapUnderTest::analytic(AnalyticMap::identity(n),
                                {Vec::Zero(n), radius});
}

}  // namespace

TEST_CASE("sample_distortion: exact homotheties") {
  SamplePlan plan;
  plan.seed = 1;
  plan.pair_count = 2000;

  const auto id_report = sample_distortion(identity_on_ball(3, 5.0), plan);
  CHECK(id_report.min_ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id_report.max_ratio == doctest::Approx(1.0).epsilon(1e-12));

  const auto dbl = MapUnderTest::analytic(AnalyticMap::scale(2, 2.0),
                                          {Vec::Zero(2), 10.0});
  const auto dbl_report = sample_distortion(dbl, plan);
  CHECK(dbl_report.min_ratio == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(dbl_report.max_ratio == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("sample_distortion: PL identity and witness integrity") {
  SamplePlan plan;
  plan.seed = 42;
  plan.pair_count = 3000;
  const auto m = MapUnderTest::pl(identity_map(test::square_complex()));
  const auto report = sample_distortion(m, plan);
  CHECK(report.min_ratio == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.max_ratio == doctest::Approx(1.0).epsilon(1e-9));

  // Witnesses reproduce their reported ratios.
  for (const WitnessPair* w : {&report.argmin, &report.argmax}) {
    const double again =
        (m.evaluate(w->x) - m.evaluate(w->y)).norm() / (w->x - w->y).norm();
    CHECK(std::abs(again - w->ratio) <= 1e-12 * std::max(1.0, w->ratio));
  }
}

TEST_CASE("sample_distortion: deterministic for a fixed plan") {
  SamplePlan plan;
  plan.seed = 7;
  plan.pair_count = 500;
  const auto m = MapUnderTest::analytic(AnalyticMap::cone(vec({0, 1})),
                                        {Vec::Zero(2), 10.0});
  const auto a = sample_distortion(m, plan);
  const auto b = sample_distortion(m, plan);
  CHECK(a.min_ratio == b.min_ratio);
  CHECK(a.max_ratio == b.max_ratio);
  CHECK((a.argmax.x - b.argmax.x).norm() == 0.0);

  plan.seed = 8;
  const auto c = sample_distortion(m, plan);
  CHECK(a.max_ratio != c.max_ratio);  // different seed, different sample
}

TEST_CASE("sample_distortion: certified PL map stays inside its bound") {
  const auto h = disc_swap_vertex_map(2);
  const auto cert = certify(h);
  SamplePlan plan;
  plan.seed = 3;
  plan.pair_count = 5000;
  const auto report = sample_distortion(MapUnderTest::pl(h), plan);
  const auto check = bound_check(report, cert.k_simplex);
  CHECK(check.pass);
  // The loose paper constant leaves real slack.
  CHECK(report.max_ratio < cert.k_simplex);
  CHECK(report.min_ratio > 1.0 / cert.k_simplex);
}

TEST_CASE("qi_constants") {
  SamplePlan plan;
  plan.seed = 5;
  plan.pair_count = 2000;

  SUBCASE("translation sits at the grid floor") {
    const auto m = MapUnderTest::analytic(
        AnalyticMap::translate(vec({3, -4})), {Vec::Zero(2), 100.0});
    const auto est = qi_constants(m, plan);
    CHECK(est.finite);
    CHECK(est.m_hat == doctest::Approx(1.0));
  }

  SUBCASE("doubling estimates ~2 within one grid step") {
    const auto m = MapUnderTest::analytic(AnalyticMap::scale(2, 2.0),
                                          {Vec::Zero(2), 1000.0});
    const auto est = qi_constants(m, plan);
    CHECK(est.finite);
    CHECK(est.m_hat >= 2.0 / 1.01);
    CHECK(est.m_hat <= 2.0 * 1.0201);
  }

  SUBCASE("quadratic stretch on radius-1e3 balls has no finite constant") {
    auto quadratic = [](const Vec& x) { return Vec(x * x.norm()); };
    for (int n : {2, 3}) {
      const auto m =
          MapUnderTest::callable(quadratic, {Vec::Zero(n), 1000.0});
      const auto est = qi_constants(m, plan);
      CHECK_FALSE(est.finite);
      REQUIRE(est.strata.size() == 3);
      // Per-stratum estimates grow roughly linearly with the radius.
      CHECK(est.strata[1].second > 3.0 * est.strata[0].second);
      CHECK(est.strata[2].second > 3.0 * est.strata[1].second);
    }
  }

  SUBCASE("absolute cap also triggers") {
    const auto m = MapUnderTest::analytic(AnalyticMap::scale(2, 50.0),
                                          {Vec::Zero(2), 100.0});
    const auto est = qi_constants(m, plan, /*cap=*/10.0);
    CHECK_FALSE(est.finite);
  }
}

TEST_CASE("equivalence_gap") {
  const std::vector<double> radii{1, 10, 100, 1000};

  SUBCASE("identical maps have zero gap") {
    const auto f = AnalyticMap::cone(vec({0, 1}));
    for (const auto& [r, sup] :
         equivalence_gap(f, f, Vec::Zero(2), radii, 500, 11))
      CHECK(sup == 0.0);
  }

  SUBCASE("bounded bump plateaus below its peak displacement") {
    DiscSequence bump(1);
    bump[0] = {vec({30, 0}), 20.0};
    const auto g = AnalyticMap::case1(bump);
    const auto f = AnalyticMap::identity(2);
    // Peak displacement is r/4 = 5 at the disc center.
    CHECK((g.evaluate(vec({30, 0})) - vec({30, 0})).norm() ==
          doctest::Approx(5.0).epsilon(1e-12));
    const auto gaps = equivalence_gap(f, g, Vec::Zero(2), radii, 4000, 11);
    for (const auto& [r, sup] : gaps) CHECK(sup <= 5.0 + 1e-9);
    CHECK(gaps.back().second > 3.0);   // the sampler found the bump
    CHECK(gaps.back().second <= 5.0);  // and the plateau holds
  }

  SUBCASE("identity vs doubling diverges linearly") {
    const auto gaps = equivalence_gap(AnalyticMap::identity(2),
                                      AnalyticMap::scale(2, 2.0),
                                      Vec::Zero(2), radii, 500, 11);
    for (size_t j = 0; j < radii.size(); ++j) {
      CHECK(gaps[j].second <= radii[j]);
      CHECK(gaps[j].second >= 0.9 * radii[j]);  // boundary-biased samples
    }
    CHECK(gaps.back().second > 50.0 * gaps.front().second);
  }

  SUBCASE("monotone by construction") {
    DiscSequence bump(1);
    bump[0] = {vec({5, 0}), 2.0};
    const auto gaps =
        equivalence_gap(AnalyticMap::identity(2), AnalyticMap::case1(bump),
                        Vec::Zero(2), radii, 200, 13);
    for (size_t j = 1; j < gaps.size(); ++j)
      CHECK(gaps[j].second >= gaps[j - 1].second);
  }
}

TEST_CASE("bound_check") {
  DistortionReport r;
  r.min_ratio = 1.0;
  r.max_ratio = 1.0;
  CHECK(bound_check(r, 1.0).pass);

  r.min_ratio = 0.4;
  r.max_ratio = 2.6;
  const auto fail = bound_check(r, 2.5);
  CHECK_FALSE(fail.pass);
  CHECK(fail.margin == doctest::Approx(0.1).epsilon(1e-12));

  CHECK_THROWS_AS(bound_check(r, 0.5), Error);
}
