#include <array>
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "pacurve/surface.hpp"
#include "pacurve/twist.hpp"

using namespace pacurve;

namespace {

HostPtr host(int g, int h) { return std::make_shared<const Triangulation>(build_surface(g, h)); }

Multicurve curve(const HostPtr& t, std::initializer_list<long> w) {
  Weights ws;
  for (long x : w) ws.emplace_back(x);
  return Multicurve(t, ws);
}

Encoding random_word(const std::vector<Multicurve>& curves, int length, std::mt19937_64& rng) {
  Encoding e = Encoding::identity(curves.front().host_ptr());
  for (int i = 0; i < length; ++i) {
    const auto& c = curves[rng() % curves.size()];
    long p = static_cast<long>(rng() % 5) - 2;
    e = e.compose(twist(c, p));
  }
  return e;
}

// Slope model of the punctured torus: edge 0 has slope (1,0), edge 1 (0,1) and
// the diagonal (1,-1). A curve of slope v meets the edge of slope u |det(v,u)| times.
using Vec = std::array<long, 2>;
using Mat = std::array<long, 4>;

Weights slope_weights(Vec v) {
  const std::array<Vec, 3> edges = {Vec{1, 0}, Vec{0, 1}, Vec{1, -1}};
  Weights w;
  for (auto u : edges) w.emplace_back(std::labs(v[0] * u[1] - v[1] * u[0]));
  return w;
}

Mat mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Vec mat_apply(const Mat& m, Vec v) { return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]}; }

Mat twist_matrix(bool on_a, long p) { return on_a ? Mat{1, p, 0, 1} : Mat{1, 0, -p, 1}; }

}  // namespace

TEST_CASE("identity and closure of move sequences") {
  auto t = host(1, 1);
  auto id = Encoding::identity(t);
  auto c = curve(t, {1, 1, 0});
  CHECK(id.act(c) == c);
  CHECK(id.flip_count() == 0);
  // A bare flip does not return to the source triangulation.
  CHECK_THROWS_AS(Encoding::from_moves(t, {FlipMove{0}}), TopologyError);
  CHECK_THROWS_AS(Encoding::from_moves(t, {FlipMove{7}}), TopologyError);
  // Flip, then relabel back onto the source.
  auto flipped = t->flip(0);
  auto iso = flipped.isomorphism_to(*t);
  REQUIRE(iso.has_value());
  auto e = Encoding::from_moves(t, {FlipMove{0}, RelabelMove{*iso}});
  CHECK(validate(e.act(c)).size() == 1);
  CHECK(e.inverse().act(e.act(c)) == c);
  CHECK_THROWS_AS(e.act(Multicurve::empty(host(2, 0))), TopologyError);
}

TEST_CASE("group axioms on actions") {
  std::mt19937_64 rng(11);
  for (auto [g, h] : {std::pair{1, 1}, {2, 0}, {0, 5}, {1, 2}}) {
    auto t = host(g, h);
    auto curves = enumerate_curves(t, t->num_edges() > 6 ? 6 : 8);
    auto probes = probe_curves(t);
    for (int trial = 0; trial < 4; ++trial) {
      auto e1 = random_word(curves, 3, rng);
      auto e2 = random_word(curves, 3, rng);
      auto e3 = random_word(curves, 3, rng);
      auto id = Encoding::identity(t);
      CHECK(equal_on(id.compose(e1), e1, probes));
      CHECK(equal_on(e1.compose(id), e1, probes));
      CHECK(equal_on(e1.compose(e1.inverse()), id, probes));
      CHECK(equal_on(e1.inverse().compose(e1), id, probes));
      CHECK(equal_on(e1.compose(e2).compose(e3), e1.compose(e2.compose(e3)), probes));
      for (const auto& p : probes) {
        CHECK(e1.compose(e2).act(p) == e1.act(e2.act(p)));
        CHECK(validate(e1.act(p)).size() == 1);
        CHECK(is_essential(e1.act(p)));
      }
      CHECK(equal_on(e1.power(3), e1.compose(e1).compose(e1), probes));
      CHECK(equal_on(e1.power(-2), e1.inverse().compose(e1.inverse()), probes));
    }
  }
}

TEST_CASE("twist fixes its core and disjoint curves") {
  for (auto [g, h] : {std::pair{1, 1}, {2, 0}, {0, 5}, {1, 2}, {0, 6}}) {
    auto t = host(g, h);
    auto curves = enumerate_curves(t, g == 2 ? 12 : 8);
    auto probes = probe_curves(t);
    for (const auto& c : curves) {
      auto tw = twist(c, 1);
      CHECK(tw.act(c) == c);
      CHECK(equal_on(twist(c, 0), Encoding::identity(t), probes));
      for (const auto& p : probes) {
        bool fixed = tw.act(p) == p;
        if (are_disjoint(p, c) || p == c) CHECK(fixed);
        if (fixed) {
          CHECK(twist(c, 3).act(p) == p);
          CHECK(twist(c, -2).act(p) == p);
        }
      }
    }
  }
}

TEST_CASE("twist powers add") {
  std::mt19937_64 rng(5);
  for (auto [g, h] : {std::pair{1, 1}, {2, 0}, {0, 5}}) {
    auto t = host(g, h);
    auto curves = enumerate_curves(t, 8);
    auto probes = probe_curves(t);
    for (int trial = 0; trial < 10; ++trial) {
      const auto& c = curves[rng() % curves.size()];
      long j = static_cast<long>(rng() % 7) - 3;
      long k = static_cast<long>(rng() % 7) - 3;
      for (const auto& a : probes) CHECK(twist(c, j + k).act(a) == twist(c, j).act(twist(c, k).act(a)));
      CHECK(equal_on(twist(c, 1).inverse(), twist(c, -1), probes));
    }
  }
}

TEST_CASE("twist composed with its inverse power is the identity on random curves") {
  std::mt19937_64 rng(9);
  auto t = host(2, 0);
  auto curves = enumerate_curves(t, 12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto& c = curves[rng() % curves.size()];
    auto e = twist(c, -1).compose(twist(c, 1));
    for (int i = 0; i < 10; ++i) {
      const auto& a = curves[rng() % curves.size()];
      CHECK(e.act(a) == a);
    }
  }
}

TEST_CASE("twist moves intersecting curves without bound") {
  for (auto [g, h] : {std::pair{1, 1}, {2, 0}, {1, 2}}) {
    auto t = host(g, h);
    auto curves = enumerate_curves(t, g == 2 ? 12 : 6);
    auto probes = probe_curves(t);
    for (size_t i = 0; i < curves.size(); i += 3) {
      const auto& c = curves[i];
      for (const auto& a : probes) {
        if (twist(c, 1).act(a) == a) continue;
        Weight prev_plus = twist(c, 4).act(a).total();
        Weight prev_minus = twist(c, -4).act(a).total();
        for (long k : {16L, 64L}) {
          Weight plus = twist(c, k).act(a).total();
          Weight minus = twist(c, -k).act(a).total();
          CHECK(plus > prev_plus);
          CHECK(minus > prev_minus);
          prev_plus = plus;
          prev_minus = minus;
        }
      }
    }
  }
}

TEST_CASE("twist growth on the punctured torus is linear") {
  auto t = host(1, 1);
  auto a = curve(t, {0, 1, 1});
  auto b = curve(t, {1, 0, 1});
  std::vector<Weight> totals;
  for (long k = 1; k <= 10; ++k) totals.push_back(twist(b, k).act(a).total());
  for (size_t i = 2; i < totals.size(); ++i) CHECK(totals[i] - 2 * totals[i - 1] + totals[i - 2] == 0);
}

TEST_CASE("handedness reference coordinates on the punctured torus") {
  auto t = host(1, 1);
  auto a = curve(t, {0, 1, 1});
  auto b = curve(t, {1, 0, 1});
  CHECK(twist(b, 1).act(a).weights() == curve(t, {1, 1, 0}).weights());
  CHECK(twist(b, -1).act(a).weights() == curve(t, {1, 1, 2}).weights());
  CHECK(twist(a, 1).act(b).weights() == curve(t, {1, 1, 2}).weights());
  CHECK(twist(a, 2).act(b).weights() == curve(t, {1, 2, 3}).weights());
}

TEST_CASE("punctured torus twist words match the integer matrix model") {
  auto t = host(1, 1);
  auto a = curve(t, {0, 1, 1});
  auto b = curve(t, {1, 0, 1});
  REQUIRE(a.weights() == slope_weights({1, 0}));
  REQUIRE(b.weights() == slope_weights({0, 1}));
  std::mt19937_64 rng(21);
  const std::array<Vec, 5> slopes = {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}, Vec{2, 1}, Vec{1, -3}};
  for (int trial = 0; trial < 25; ++trial) {
    Encoding e = Encoding::identity(t);
    Mat m{1, 0, 0, 1};
    int length = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < length; ++i) {
      bool on_a = rng() % 2 == 0;
      long p = static_cast<long>(rng() % 5) - 2;
      e = e.compose(twist(on_a ? a : b, p));
      m = mul(m, twist_matrix(on_a, p));
    }
    for (auto v : slopes) {
      Multicurve c(t, slope_weights(v));
      CHECK(e.act(c).weights() == slope_weights(mat_apply(m, v)));
    }
  }
}

TEST_CASE("isolating curves on the genus-two model twist nontrivially") {
  auto t = host(2, 0);
  auto probes = probe_curves(t);
  int seen = 0;
  for (const auto& c : enumerate_curves(t, 12)) {
    if (!is_isolating(c)) continue;
    ++seen;
    auto tw = twist(c, 1);
    CHECK(tw.act(c) == c);
    bool moved = false;
    for (const auto& p : probes) moved = moved || !(tw.act(p) == p);
    CHECK(moved);
    for (const auto& p : probes) CHECK(twist(c, 2).act(p) == tw.act(tw.act(p)));
  }
  CHECK(seen > 0);
}

TEST_CASE("intersection positivity") {
  auto t = host(1, 1);
  auto a = curve(t, {0, 1, 1});
  auto b = curve(t, {1, 0, 1});
  CHECK(intersects(a, b));
  CHECK(intersects(b, a));
  CHECK_FALSE(intersects(a, a));

  auto s20 = host(2, 0);
  auto curves = enumerate_curves(s20, 8);
  for (size_t i = 0; i < curves.size(); i += 4) {
    for (size_t j = 0; j < curves.size(); j += 3) {
      if (are_disjoint(curves[i], curves[j])) CHECK_FALSE(intersects(curves[i], curves[j]));
      CHECK(intersects(curves[i], curves[j]) == intersects(curves[j], curves[i]));
    }
  }
}

TEST_CASE("equality on probes") {
  auto t = host(1, 1);
  auto a = curve(t, {0, 1, 1});
  auto b = curve(t, {1, 0, 1});
  auto e = twist(a, 1).compose(twist(b, -1));
  CHECK(equal_on(e, e));
  CHECK_FALSE(equal_on(twist(a, 1), twist(a, 2), {b}));
  CHECK(equal_on(e.compose(e.inverse()), Encoding::identity(t)));
  CHECK_THROWS_AS(equal_on(e, Encoding::identity(host(2, 0))), TopologyError);
}

TEST_CASE("twist rejects inessential and disconnected curves") {
  auto t = host(1, 1);
  CHECK_THROWS_AS(twist(curve(t, {2, 2, 2}), 1), NormalCurveError);
  CHECK_THROWS_AS(twist(curve(t, {2, 2, 0}), 1), NormalCurveError);
  CHECK_THROWS_AS(twist(Multicurve::empty(t), 1), NormalCurveError);
}
