#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "pacurve/orbit_graph.hpp"
#include "pacurve/surface.hpp"
#include "pacurve/twist.hpp"

using namespace pacurve;

namespace {

using fixtures::curve;
using fixtures::host;

// Greedily adds enumerated curves that keep the system independent.
CurveSystem greedy_system(const HostPtr& t, int cap, size_t want) {
  CurveSystem sys(t, {}, {});
  for (const auto& c : enumerate_curves(t, cap)) {
    if (sys.size() == want) break;
    auto next = sys.with_curve("c" + std::to_string(sys.size() + 1), c);
    if (check_independent(next).independent) sys = next;
  }
  return sys;
}

// Exhaustive oracle: some nonempty subset S with next(S) = S.
bool brute_force_orbit(const OrbitGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (!(mask & (1u << i))) continue;
      int j = g.next[i];
      closed = j >= 0 && (mask & (1u << j));
    }
    if (closed) return true;
  }
  return false;
}

OrbitGraph random_graph(int n, std::mt19937_64& rng, double edge_prob) {
  std::vector<int> targets(static_cast<size_t>(n));
  std::iota(targets.begin(), targets.end(), 0);
  std::shuffle(targets.begin(), targets.end(), rng);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    if (u(rng) < edge_prob) edges.emplace_back(i, targets[static_cast<size_t>(i)]);
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  return OrbitGraph(names, edges);
}

}  // namespace

TEST_CASE("independence diagnostics") {
  auto s20 = host(2, 0);
  auto nonsep = curve(s20, {0, 1, 1, 0, 0, 1, 0, 0, 0});
  CHECK(check_independent(CurveSystem(s20, {"c"}, {nonsep})).independent);

  auto link = Multicurve(s20, vertex_links(*s20)[0]);
  auto rep = check_independent(CurveSystem(s20, {"c", "v"}, {nonsep, link}));
  CHECK_FALSE(rep.independent);
  REQUIRE(rep.problems.size() == 1);
  CHECK(rep.problems[0] == "v: inessential");

  rep = check_independent(CurveSystem(s20, {"c", "d"}, {nonsep, nonsep}));
  CHECK_FALSE(rep.independent);
  CHECK(rep.problems[0] == "c, d: parallel");

  auto s11 = host(1, 1);
  rep = check_independent(CurveSystem(s11, {"a", "b"}, {curve(s11, {0, 1, 1}), curve(s11, {1, 0, 1})}));
  CHECK_FALSE(rep.independent);
  CHECK(rep.problems[0] == "a, b: intersect");

  rep = check_independent(CurveSystem(s11, {"m"}, {curve(s11, {2, 2, 0})}));
  CHECK_FALSE(rep.independent);
  CHECK(rep.problems[0] == "m: not a single connected curve");
}

TEST_CASE("curves parallel through the marked vertex are not independent") {
  // On the closed model two distinct coordinate vectors can cobound an annulus
  // containing only the vertex.
  auto s20 = host(2, 0);
  auto curves = enumerate_curves(s20, 8);
  int found = 0;
  for (size_t i = 0; i < curves.size(); ++i) {
    for (size_t j = i + 1; j < curves.size(); ++j) {
      if (!are_disjoint(curves[i], curves[j])) continue;
      CurveSystem sys(s20, {"x", "y"}, {curves[i], curves[j]});
      auto pieces = cut_along(sys.joint());
      bool annulus = false;
      for (const auto& p : pieces) annulus = annulus || (p.euler_characteristic == 0 && p.vertices == 1);
      auto rep = check_independent(sys);
      CHECK(rep.independent == !annulus);
      if (annulus) ++found;
    }
  }
  CHECK(found > 0);
}

TEST_CASE("maximality is the pants condition") {
  auto s11 = host(1, 1);
  CHECK(check_maximal(CurveSystem(s11, {"a"}, {curve(s11, {0, 1, 1})})));

  auto s20 = host(2, 0);
  CHECK_FALSE(check_maximal(CurveSystem(s20, {"c"}, {curve(s20, {0, 1, 1, 0, 0, 1, 0, 0, 0})})));

  for (auto [g, h] : {std::pair{2, 0}, {0, 5}, {1, 2}, {0, 6}, {1, 3}}) {
    auto t = host(g, h);
    auto sys = greedy_system(t, 8, static_cast<size_t>(max_independent_curves(*t)));
    REQUIRE(static_cast<int>(sys.size()) == 3 * g + h - 3);
    CHECK(check_maximal(sys));
    // Dropping any curve leaves a non-pants piece.
    for (size_t k = 0; k < sys.size(); ++k) {
      CurveSystem smaller(t, {}, {});
      for (size_t i = 0; i < sys.size(); ++i) {
        if (i != k) smaller = smaller.with_curve(sys.names[i], sys.curves[i]);
      }
      CHECK_FALSE(check_maximal(smaller));
    }
  }
  CHECK_THROWS_AS(check_maximal(CurveSystem(s11, {"a", "b"}, {curve(s11, {0, 1, 1}), curve(s11, {1, 0, 1})})),
                  TopologyError);
}

TEST_CASE("gamma from actual maps") {
  auto s11 = host(1, 1);
  auto a = curve(s11, {0, 1, 1});
  auto b = curve(s11, {1, 0, 1});
  CurveSystem sys(s11, {"a"}, {a});

  auto id = build_gamma(sys.with_map(Encoding::identity(s11)));
  CHECK(id.edges() == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(find_orbit(id) == std::vector<int>{0});

  auto moved = build_gamma(sys.with_map(twist(b, 1)));
  CHECK(moved.edges().empty());
  CHECK_FALSE(find_orbit(moved).has_value());

  // Chain c1 -> c2: with the handle swap σ and c2 = σ(c1) disjoint from c1,
  // f = τ_e ∘ σ for e missing c2 but meeting c1 sends c2 to τ_e(c1), off the system.
  auto s20 = host(2, 0);
  auto sigma = fixtures::automorphisms(s20).at(0);
  auto pool = enumerate_curves(s20, 8);
  std::optional<std::pair<CurveSystem, Encoding>> found;
  for (const auto& c1 : pool) {
    auto c2 = sigma.act(c1);
    CurveSystem chain(s20, {"c1", "c2"}, {c1, c2});
    if (c2 == c1 || !check_independent(chain).independent) continue;
    for (const auto& e : pool) {
      if (!intersects(e, c2) && intersects(e, c1)) {
        found = std::pair{chain, twist(e, 1).compose(sigma)};
        break;
      }
    }
    if (found) break;
  }
  REQUIRE(found.has_value());
  auto g = build_gamma(found->first.with_map(found->second));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK_FALSE(find_orbit(g).has_value());
  auto comps = chain_decomposition(g);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].vertices == std::vector<int>{0, 1});
  CHECK_THROWS_AS(build_gamma(sys), std::invalid_argument);
}

TEST_CASE("orbit examples and chain decomposition") {
  std::vector<std::string> v3 = {"c1", "c2", "c3"};
  CHECK(find_orbit(OrbitGraph(v3, {{1, 1}})) == std::vector<int>{1});
  CHECK(find_orbit(OrbitGraph(v3, {{0, 1}, {1, 0}})) == std::vector<int>{0, 1});
  CHECK(find_orbit(OrbitGraph(v3, {{2, 0}, {0, 2}, {1, 1}})) == std::vector<int>{0, 2});
  CHECK_FALSE(find_orbit(OrbitGraph(v3, {{0, 1}, {1, 2}})).has_value());

  auto edgeless = chain_decomposition(OrbitGraph(v3, {}));
  REQUIRE(edgeless.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(edgeless[static_cast<size_t>(i)].representative() == i);

  auto chain = chain_decomposition(OrbitGraph(v3, {{0, 1}, {1, 2}}));
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].vertices == std::vector<int>{0, 1, 2});

  auto mixed = chain_decomposition(OrbitGraph(v3, {{2, 0}}));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].representative() == 1);
  CHECK(mixed[1].representative() == 2);
  CHECK(mixed[1].vertices == std::vector<int>{2, 0});

  CHECK_THROWS_AS(chain_decomposition(OrbitGraph(v3, {{0, 0}})), std::logic_error);
  CHECK_THROWS_AS(OrbitGraph(v3, {{0, 1}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(OrbitGraph(v3, {{0, 2}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(OrbitGraph(v3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("find_orbit agrees with exhaustive subset search") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto g = random_graph(n, rng, 0.7);
    auto orbit = find_orbit(g);
    CHECK(orbit.has_value() == brute_force_orbit(g));
    if (orbit) {
      // The returned set is closed under next and traversed in order.
      for (size_t i = 0; i < orbit->size(); ++i) {
        CHECK(g.next[(*orbit)[i]] == (*orbit)[(i + 1) % orbit->size()]);
      }
    } else {
      // Every component is an isolated vertex or a chain.
      auto comps = chain_decomposition(g);
      size_t covered = 0;
      for (const auto& c : comps) {
        CHECK(g.prev[c.representative()] == -1);
        CHECK(g.next[c.vertices.back()] == -1);
        covered += c.vertices.size();
      }
      CHECK(covered == g.vertices.size());
    }
  }
}
