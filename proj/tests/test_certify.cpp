#include <doctest.h>

#include <cmath>

#include "plqi/certify.hpp"
#include "plqi/constructions.hpp"
#include "plqi/rng.hpp"
#include "test_util.hpp"

using namespace plqi;
using test::vec;

TEST_CASE("n1_constant at reference angles") {
  CHECK(n1_constant(M_PI / 2) ==
        doctest::Approx(2.0 + std::sqrt(0.5)).epsilon(1e-12));
  CHECK(n1_constant(M_PI / 2) == doctest::Approx(2.70711).epsilon(1e-5));
  CHECK(n1_constant(M_PI / 3) ==
        doctest::Approx(1.0 + std::sqrt(3.0) + 1.5).epsilon(1e-12));
  CHECK(n1_constant(M_PI / 3) == doctest::Approx(4.23205).epsilon(1e-5));

  // Diverges as theta -> 0+, monotone decreasing.
  CHECK(n1_constant(1e-6) > 1e5);
  CHECK(n1_constant(0.3) > n1_constant(0.5));

  CHECK_THROWS_AS(n1_constant(0.0), ThetaOutOfRange);
  CHECK_THROWS_AS(n1_constant(-1.0), ThetaOutOfRange);
  CHECK_THROWS_AS(n1_constant(M_PI / 2 + 0.1), ThetaOutOfRange);
}

TEST_CASE("prop31_bound at reference parameters") {
  CHECK(prop31_bound(3.0, 0.5, 1) == 3.0);  // n = 1: angle condition vacuous

  const double n_pi2 = n1_constant(M_PI / 2) * n1_constant(M_PI / 2);
  CHECK(prop31_bound(1.0, M_PI / 2, 2) == doctest::Approx(n_pi2).epsilon(1e-12));
  CHECK(prop31_bound(1.0, M_PI / 2, 2) == doctest::Approx(7.32843).epsilon(1e-5));

  // Recomputed independently: 2 * N1(pi/3)^4 * sqrt(6).
  const double n1 = 1.0 + std::sqrt(3.0) + 1.5;
  CHECK(prop31_bound(2.0, M_PI / 3, 3) ==
        doctest::Approx(2.0 * std::pow(n1, 4) * std::sqrt(6.0)).epsilon(1e-12));
  CHECK(prop31_bound(2.0, M_PI / 3, 3) == doctest::Approx(1571.44).epsilon(1e-4));

  CHECK_THROWS_AS(prop31_bound(0.5, 1.0, 2), Error);
  CHECK_THROWS_AS(prop31_bound(2.0, 1.0, 0), Error);
}

TEST_CASE("prop31_bound monotonicity") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double m = rng.uniform(1.0, 8.0);
    const double theta = rng.uniform(0.05, M_PI / 2);
    const int n = 1 + rng.uniform_int(4);
    const double k = prop31_bound(m, theta, n);
    CHECK(prop31_bound(m * 1.5, theta, n) >= k);
    CHECK(prop31_bound(m, theta, n + 1) >= k);
    if (theta > 0.1) CHECK(prop31_bound(m, theta - 0.05, n) >= k);
  }
}

TEST_CASE("vertex_ratio_bound") {
  const Complex sq = test::square_complex();

  SUBCASE("identity observes 1") {
    CHECK(vertex_ratio_bound(identity_map(sq)) == doctest::Approx(1.0));
  }

  SUBCASE("uniform doubling observes 2") {
    std::vector<Vec> scaled;
    for (const Vec& v : sq.vertices()) scaled.push_back(2.0 * v);
    const Complex big(2, std::move(scaled), sq.maximal_simplices());
    const SimplicialMap m(sq, big, {0, 1, 2, 3});
    CHECK(vertex_ratio_bound(m) == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("disc-swap map in n = 2: the (O, x0) edge contributes 4/3") {
    const auto h = disc_swap_vertex_map(2);
    const Vec o = vec({0, 0}), o_prime = vec({0, 0.25});
    const Vec x0 = h.source().vertex(0);
    const double edge_ratio = (o_prime - x0).norm() / (o - x0).norm();
    CHECK(edge_ratio == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(vertex_ratio_bound(h) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  }

  SUBCASE("degenerate image edge") {
    const Complex tri(2, {vec({0, 0}), vec({1, 0}), vec({0, 1})}, {{0, 1, 2}});
    const SimplicialMap collapse(tri, tri, {0, 0, 2});
    CHECK_THROWS_AS(vertex_ratio_bound(collapse), DegenerateEdge);
  }
}

TEST_CASE("certify: identity on a single equilateral triangle") {
  const Complex c(2,
                  {vec({0, 0}), vec({1, 0}), vec({0.5, std::sqrt(3.0) / 2})},
                  {{0, 1, 2}});
  const auto cert = certify(identity_map(c));
  CHECK(cert.n == 2);
  CHECK(cert.m_obs == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(cert.theta.has_value());
  CHECK(*cert.theta == doctest::Approx(M_PI / 3).epsilon(1e-12));
  CHECK(cert.k_simplex ==
        doctest::Approx(prop31_bound(1.0 * (1 + 1e-6), M_PI / 3, 2))
            .epsilon(1e-12));
  CHECK(cert.convex_carrier);
  REQUIRE(cert.k_global.has_value());
  CHECK(*cert.k_global == cert.k_simplex);
}

TEST_CASE("certify: disc-swap map has a finite certificate") {
  const auto cert = certify(disc_swap_vertex_map(2));
  CHECK(cert.m_obs == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  REQUIRE(cert.theta.has_value());
  CHECK(*cert.theta > 0.0);
  CHECK(*cert.theta <= M_PI / 2);
  CHECK(cert.k_simplex > 1.0);
  CHECK(std::isfinite(cert.k_simplex));
  CHECK(cert.convex_carrier);  // |K| is the outer simplex, convex
}

TEST_CASE("certify: errors propagate") {
  // Degenerate target simplex.
  const Complex tri(2, {vec({0, 0}), vec({1, 0}), vec({0, 1})}, {{0, 1, 2}});
  const Complex flat(2, {vec({0, 0}), vec({1, 1}), vec({2, 2})}, {{0, 1, 2}});
  CHECK_THROWS(certify(SimplicialMap(tri, flat, {0, 1, 2})));

  // Non-bijective map.
  CHECK_THROWS_AS(certify(SimplicialMap(tri, tri, {0, 0, 2})), NotBijective);
}

TEST_CASE("certify: scale invariance of M_obs and theta") {
  Rng rng(3);
  const auto h = disc_swap_vertex_map(3);
  const auto base = certify(h);
  for (double lambda : {0.01, 7.0, 1234.5}) {
    std::vector<Vec> src, tgt;
    for (const Vec& v : h.source().vertices()) src.push_back(lambda * v);
    for (const Vec& v : h.target().vertices()) tgt.push_back(lambda * v);
    const SimplicialMap scaled(
        Complex(3, std::move(src), h.source().maximal_simplices()),
        Complex(3, std::move(tgt), h.target().maximal_simplices()),
        h.vertex_images());
    const auto cert = certify(scaled);
    CHECK(cert.m_obs == doctest::Approx(base.m_obs).epsilon(1e-9));
    CHECK(*cert.theta == doctest::Approx(*base.theta).epsilon(1e-9));
    CHECK(cert.k_simplex == doctest::Approx(base.k_simplex).epsilon(1e-9));
  }
}

TEST_CASE("certify: 1-dimensional complexes use the edge-ratio constant") {
  const Complex path(2, {vec({0, 0}), vec({1, 0}), vec({2, 1})},
                     {{0, 1}, {1, 2}});
  const Complex path2(2, {vec({0, 0}), vec({2, 0}), vec({4, 2})},
                      {{0, 1}, {1, 2}});
  const auto cert = certify(SimplicialMap(path, path2, {0, 1, 2}));
  CHECK_FALSE(cert.theta.has_value());
  CHECK(cert.k_simplex == doctest::Approx(cert.m_bound).epsilon(1e-12));
}

TEST_CASE("triangle_inequality_check") {
  SUBCASE("equilateral instance satisfies the bound directly") {
    // a + b = 2c against N1(pi/3) ~ 4.23.
    CHECK(2.0 <= n1_constant(M_PI / 3));
  }

  SUBCASE("extreme angle pi - theta still holds") {
    const double theta = M_PI / 6;
    const double gamma = M_PI - theta;  // angle at C
    const double a = 1.0, b = 1.0;
    const double c =
        std::sqrt(a * a + b * b - 2 * a * b * std::cos(gamma));
    CHECK(a + b <= n1_constant(theta) * c + 1e-9);
  }

  SUBCASE("1e5 random trials at pi/6: zero violations") {
    const auto report = triangle_inequality_check(M_PI / 6, 100000, 2024);
    CHECK(report.violations == 0);
    CHECK(report.max_lhs_over_rhs <= 1.0);
    CHECK(report.max_lhs_over_rhs > 0.2);  // the sampler gets near the bound
  }

  SUBCASE("theta range enforced") {
    CHECK_THROWS_AS(triangle_inequality_check(0.0, 10, 0), ThetaOutOfRange);
    CHECK_THROWS_AS(triangle_inequality_check(M_PI / 2, 10, 0),
                    ThetaOutOfRange);
  }
}
