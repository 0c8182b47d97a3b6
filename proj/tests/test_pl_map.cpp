#include <doctest.h>

#include <cmath>

#include "plqi/constructions.hpp"
#include "plqi/pl_map.hpp"
#include "plqi/rng.hpp"
#include "test_util.hpp"

using namespace plqi;
using test::vec;

namespace {

// Single full-dimensional simplex as a one-simplex complex.
Complex one_simplex_complex(const Simplex& s) {
  std::vector<int> all;
  for (int i = 0; i <= s.dim(); ++i) all.push_back(i);
  return Complex(s.ambient_dim(), s.vertices(), {all});
}

SimplicialMap random_single_simplex_map(int n, Rng& rng) {
  const Simplex src = test::random_simplex(n, n, rng, 1e-3);
  const Simplex tgt = test::random_simplex(n, n, rng, 1e-3);
  std::vector<int> images;
  for (int i = 0; i <= n; ++i) images.push_back(i);
  return SimplicialMap(one_simplex_complex(src), one_simplex_complex(tgt),
                       images);
}

}  // namespace

TEST_CASE("validate: identity is a homeomorphism") {
  const auto m = identity_map(test::square_complex());
  const auto report = m.validate();
  CHECK(report.simplicial);
  CHECK(report.homeomorphism);
}

TEST_CASE("validate: the disc-swap vertex map is a homeomorphism") {
  const auto report = disc_swap_vertex_map(2).validate();
  CHECK(report.simplicial);
  CHECK(report.homeomorphism);
}

TEST_CASE("validate: collapsing two vertices is simplicial but not bijective") {
  const Complex tri(2, {vec({0, 0}), vec({1, 0}), vec({0, 1})}, {{0, 1, 2}});
  const SimplicialMap collapse(tri, tri, {0, 0, 2});
  const auto report = collapse.validate();
  CHECK(report.simplicial);
  CHECK_FALSE(report.homeomorphism);
  CHECK_THROWS_AS(collapse.inverse(), NotBijective);
}

TEST_CASE("validate: image not spanning a target face") {
  // Two disjoint edges in the target; the source triangle's image would
  // need {0,1,2} which no target simplex contains.
  const Complex tri(2, {vec({0, 0}), vec({1, 0}), vec({0, 1})}, {{0, 1, 2}});
  const Complex edges(2, {vec({0, 0}), vec({1, 0}), vec({5, 5}), vec({6, 5})},
                      {{0, 1}, {2, 3}});
  const SimplicialMap bad(tri, edges, {0, 1, 2});
  CHECK_FALSE(bad.validate().simplicial);
  CHECK_THROWS_AS(bad.require_simplicial(), NotSimplicial);
}

TEST_CASE("evaluate: vertices, centroids, and the disc-swap center") {
  const auto h = disc_swap_vertex_map(2);

  for (int v = 0; v < h.source().vertex_count(); ++v) {
    const Vec img = h.evaluate(h.source().vertex(v));
    CHECK((img - h.target().vertex(h.vertex_images()[v])).norm() <= 1e-12);
  }

  // Centroid of each simplex maps to the centroid of the image simplex.
  const Simplex& s0 = h.source().realize(0);
  const Simplex& t0 = h.target().realize(0);
  CHECK((h.evaluate(s0.centroid()) - t0.centroid()).norm() <= 1e-12);

  // h'(O) = O' = (0, 1/4).
  const Vec img = h.evaluate(vec({0, 0}));
  CHECK(img[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(img[1] == doctest::Approx(0.25).epsilon(1e-12));

  CHECK_THROWS_AS(h.evaluate(vec({2, 2})), NotInCarrier);
}

TEST_CASE("evaluate is affine within a simplex") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + rng.uniform_int(2);
    const auto m = random_single_simplex_map(n, rng);
    const Simplex& s = m.source().realize(0);
    const Vec p = point_from_barycentric({rng.dirichlet_uniform(n + 1), 0}, s);
    const Vec q = point_from_barycentric({rng.dirichlet_uniform(n + 1), 0}, s);
    const double alpha = rng.uniform();
    const Vec lhs = m.evaluate(alpha * p + (1 - alpha) * q);
    const Vec rhs = alpha * m.evaluate(p) + (1 - alpha) * m.evaluate(q);
    CHECK((lhs - rhs).norm() <= 1e-9 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("evaluation on a shared face is carrier-independent") {
  const Complex sq = test::square_complex();
  // Deform the square: send (1,1) off to (2, 1.5); the diagonal {1,2} is
  // shared by both triangles.
  const Complex deformed(
      2, {vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({2, 1.5})},
      sq.maximal_simplices());
  const SimplicialMap m(sq, deformed, {0, 1, 2, 3});
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const double t = rng.uniform();
    const Vec p = t * vec({1, 0}) + (1 - t) * vec({0, 1});  // on the diagonal
    // Push p through each adjacent simplex by hand.
    Vec by_simplex[2];
    for (int id = 0; id < 2; ++id) {
      const Simplex& s = sq.realize(id);
      const auto b = barycentric_coordinates(p, s);
      REQUIRE(b.inside(s.diameter()));
      Vec img = Vec::Zero(2);
      for (size_t l = 0; l < sq.simplex(id).size(); ++l)
        img += b.weights[static_cast<int>(l)] *
               deformed.vertex(sq.simplex(id)[l]);
      by_simplex[id] = img;
    }
    CHECK((by_simplex[0] - by_simplex[1]).norm() <= 1e-9);
    CHECK((m.evaluate(p) - by_simplex[0]).norm() <= 1e-9);
  }
}

TEST_CASE("inverse: identity, disc-swap, and sampled round trips") {
  const auto id = identity_map(test::square_complex());
  CHECK(id.inverse().vertex_images() == id.vertex_images());

  const auto h = disc_swap_vertex_map(2);
  const auto h_inv = h.inverse();
  const Vec o_prime = vec({0, 0.25});
  CHECK((h_inv.evaluate(o_prime) - vec({0, 0})).norm() <= 1e-12);

  Rng rng(77);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int id_s = rng.uniform_int(h.source().simplex_count());
    const Simplex& s = h.source().realize(id_s);
    const Vec p =
        point_from_barycentric({rng.dirichlet_uniform(s.dim() + 1), 0}, s);
    worst = std::max(worst, (h_inv.evaluate(h.evaluate(p)) - p).norm());
    // Two-sided: also invert from the target side.
    const int id_t = rng.uniform_int(h.target().simplex_count());
    const Simplex& t = h.target().realize(id_t);
    const Vec q =
        point_from_barycentric({rng.dirichlet_uniform(t.dim() + 1), 0}, t);
    worst = std::max(worst, (h.evaluate(h_inv.evaluate(q)) - q).norm());
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("compose") {
  const auto h = disc_swap_vertex_map(2);
  const auto id_src = identity_map(h.source());

  SUBCASE("identity absorbs") {
    CHECK(compose(id_src, h).vertex_images() == h.vertex_images());
  }

  SUBCASE("map followed by its inverse is the identity table") {
    const auto round = compose(h, h.inverse());
    for (int v = 0; v < h.source().vertex_count(); ++v)
      CHECK(round.vertex_images()[v] == v);
  }

  SUBCASE("translation-built second leg composes vertex tables") {
    // K' -> K'': translate every vertex by (3, 0).
    std::vector<Vec> moved;
    for (const Vec& v : h.target().vertices()) moved.push_back(v + vec({3, 0}));
    const Complex kpp(2, std::move(moved), h.target().maximal_simplices());
    std::vector<int> idv;
    for (int i = 0; i < h.target().vertex_count(); ++i) idv.push_back(i);
    const SimplicialMap shift(h.target(), kpp, idv);
    const auto composite = compose(h, shift);
    CHECK(composite.vertex_images() == h.vertex_images());
    const Vec img = composite.evaluate(vec({0, 0}));
    CHECK((img - vec({3, 0.25})).norm() <= 1e-12);
  }

  SUBCASE("incompatible middle complexes are rejected") {
    CHECK_THROWS_AS(compose(h, h), IncompatibleComplexes);
  }
}
