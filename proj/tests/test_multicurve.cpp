#include <random>

#include "doctest.h"
#include "pacurve/multicurve.hpp"
#include "pacurve/surface.hpp"

using namespace pacurve;

namespace {

HostPtr host(int g, int h) { return std::make_shared<const Triangulation>(build_surface(g, h)); }

Multicurve curve(const HostPtr& t, std::initializer_list<long> w) {
  Weights ws;
  for (long x : w) ws.emplace_back(x);
  return Multicurve(t, ws);
}

}  // namespace

TEST_CASE("validate splits into components") {
  auto t = host(1, 1);
  CHECK(validate(curve(t, {0, 0, 0})).empty());
  auto comps = validate(curve(t, {1, 1, 0}));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].multiplicity == 1);
  CHECK_THROWS_AS(validate(curve(t, {1, 0, 0})), NormalCurveError);
  CHECK_THROWS_AS(validate(curve(t, {3, 1, 1})), NormalCurveError);

  auto doubled = validate(curve(t, {2, 2, 0}));
  REQUIRE(doubled.size() == 1);
  CHECK(doubled[0].multiplicity == 2);
  CHECK(doubled[0].curve == curve(t, {1, 1, 0}));
}

TEST_CASE("flip transport of normal coordinates") {
  auto t = host(1, 1);
  // Every side of the square around edge 2 carries weight 1 and the diagonal 2.
  auto c = curve(t, {1, 1, 2});
  auto sq = t->square(2);
  for (int s : sq.sides) CHECK(c[s] == 1);
  auto flipped = transform_under_flip(c, 2);
  CHECK(flipped[2] == 0);
  CHECK(flipped[0] == 1);

  auto empty = Multicurve::empty(t);
  CHECK(transform_under_flip(empty, 0).is_empty());

  auto back = transform_under_flip(flipped, 2);
  CHECK(back.weights() == c.weights());
}

TEST_CASE("flip transport is an involution and preserves validity on enumerated curves") {
  for (auto [g, h] : {std::pair{1, 1}, {2, 0}, {0, 5}, {1, 2}}) {
    auto t = host(g, h);
    int cap = t->num_edges() > 6 ? 6 : 8;
    for (const auto& c : enumerate_curves(t, cap)) {
      for (int e = 0; e < t->num_edges(); ++e) {
        auto f = transform_under_flip(c, e);
        auto comps = validate(f);
        CHECK(comps.size() == 1);
        CHECK(flip_weights(f.host(), f.weights(), e) == c.weights());
      }
    }
  }
}

TEST_CASE("essentiality excludes the vertex and puncture links") {
  auto s20 = host(2, 0);
  auto link = vertex_links(*s20);
  REQUIRE(link.size() == 1);
  CHECK_FALSE(is_essential(Multicurve(s20, link[0])));

  auto s11 = host(1, 1);
  CHECK_FALSE(is_essential(curve(s11, {2, 2, 2})));
  CHECK(is_essential(curve(s11, {1, 1, 0})));
  CHECK_THROWS_AS(is_essential(curve(s11, {2, 2, 0})), NormalCurveError);
}

TEST_CASE("parallelism is coordinate equality") {
  auto t = host(1, 1);
  auto a = curve(t, {0, 1, 1});
  auto b = curve(t, {1, 0, 1});
  CHECK(is_parallel(a, a));
  CHECK_FALSE(is_parallel(a, b));
  auto other = host(2, 0);
  CHECK_THROWS_AS(is_parallel(a, Multicurve::empty(other)), TopologyError);
}

TEST_CASE("disjointness via the sum of coordinates") {
  auto t = host(1, 1);
  CHECK_FALSE(are_disjoint(curve(t, {0, 1, 1}), curve(t, {1, 0, 1})));
  CHECK(are_disjoint(curve(t, {0, 1, 1}), curve(t, {0, 1, 1})));
  auto s05 = host(0, 5);
  auto curves = enumerate_curves(s05, 6);
  int disjoint_pairs = 0;
  for (size_t i = 0; i < curves.size(); ++i) {
    for (size_t j = i + 1; j < curves.size(); ++j) disjoint_pairs += are_disjoint(curves[i], curves[j]) ? 1 : 0;
  }
  CHECK(disjoint_pairs > 0);
}

TEST_CASE("cut along multicurves") {
  auto s20 = host(2, 0);
  auto empty_cut = cut_along(Multicurve::empty(s20));
  REQUIRE(empty_cut.size() == 1);
  CHECK(empty_cut[0].euler_characteristic == -2);
  CHECK(empty_cut[0].boundary_circles == 0);
  CHECK(empty_cut[0].vertices == 1);

  auto s11 = host(1, 1);
  auto pants = cut_along(curve(s11, {1, 1, 0}));
  REQUIRE(pants.size() == 1);
  CHECK(pants[0].euler_characteristic == -1);
  CHECK(pants[0].boundary_circles == 2);
  CHECK(pants[0].punctures == 1);
  CHECK(pants[0].is_pants());

  // The first separating curve of the genus-two model.
  bool found = false;
  for (const auto& c : enumerate_curves(s20, 12)) {
    auto pieces = cut_along(c);
    if (pieces.size() != 2) {
      CHECK(pieces.size() == 1);
      CHECK(pieces[0].euler_characteristic == -2);
      CHECK(pieces[0].boundary_circles == 2);
      continue;
    }
    found = true;
    CHECK(pieces[0].euler_characteristic == -1);
    CHECK(pieces[1].euler_characteristic == -1);
    CHECK(pieces[0].boundary_circles == 1);
    CHECK(pieces[1].boundary_circles == 1);
    CHECK(pieces[0].vertices + pieces[1].vertices == 1);
    CHECK(is_isolating(c));
  }
  CHECK(found);
}

TEST_CASE("euler characteristic is conserved by cutting") {
  std::mt19937_64 rng(3);
  for (auto [g, h] : {std::pair{1, 1}, {2, 0}, {0, 5}, {1, 2}, {0, 4}}) {
    auto t = host(g, h);
    auto curves = enumerate_curves(t, t->num_edges() > 6 ? 6 : 10);
    REQUIRE_FALSE(curves.empty());
    for (const auto& c : curves) {
      CHECK(sgn(c.total()) > 0);
      int sum = 0;
      for (const auto& p : cut_along(c)) {
        sum += p.euler_characteristic;
        CHECK(p.euler_characteristic <= 0);
      }
      CHECK(sum == t->euler_characteristic());
    }
    // Random non-negative combinations, including peripheral and intersecting sums.
    for (int trial = 0; trial < 40; ++trial) {
      Multicurve m = Multicurve::empty(t);
      for (int k = 0; k < 3; ++k) {
        auto idx = rng() % curves.size();
        m = m + curves[idx];
      }
      int sum = 0;
      for (const auto& p : cut_along(m)) sum += p.euler_characteristic;
      CHECK(sum == t->euler_characteristic());
    }
  }
}
