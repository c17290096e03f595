#pragma once

// Randomized curve systems and maps shared by the unit and acceptance tests.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pacurve/orbit_graph.hpp"
#include "pacurve/surface.hpp"
#include "pacurve/twist.hpp"

namespace fixtures {

using namespace pacurve;

inline HostPtr host(int g, int h) { return std::make_shared<const Triangulation>(build_surface(g, h)); }

inline Multicurve curve(const HostPtr& t, std::initializer_list<long> w) {
  Weights ws;
  for (long x : w) ws.emplace_back(x);
  return Multicurve(t, ws);
}

/// Relabelings of the host onto itself that move some probe curve.
inline std::vector<Encoding> automorphisms(const HostPtr& t) {
  std::vector<Encoding> out;
  auto id = Encoding::identity(t);
  for (const auto& iso : t->isomorphisms_to(*t)) {
    auto e = Encoding::from_moves(t, {RelabelMove{iso}});
    if (!equal_on(e, id)) out.push_back(e);
  }
  return out;
}

inline Encoding random_word(const std::vector<Multicurve>& curves, int length, std::mt19937_64& rng) {
  Encoding e = Encoding::identity(curves.front().host_ptr());
  for (int i = 0; i < length; ++i) {
    const auto& c = curves[rng() % curves.size()];
    e = e.compose(twist(c, rng() % 2 == 0 ? 1 : -1));
  }
  return e;
}

/// Adds random enumerated curves while the system stays independent.
inline CurveSystem grow(CurveSystem sys, const std::vector<Multicurve>& pool, size_t extra, std::mt19937_64& rng) {
  std::vector<Multicurve> shuffled = pool;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  for (const auto& c : shuffled) {
    if (extra == 0) break;
    auto next = sys.with_curve("c" + std::to_string(sys.size() + 1), c);
    if (check_independent(next).independent) {
      sys = next;
      --extra;
    }
  }
  return sys;
}

struct CycleFixture {
  CurveSystem system;
  Encoding f;
  int period = 0;
};

/// A system containing the orbit {c, σc, …} of an automorphism σ, plus extra
/// σ-independent curves, with f = σ ∘ (twists along the orbit), all conjugated
/// by a short random twist word. With period_one the orbit is a single curve
/// fixed by a twist map instead.
inline std::optional<CycleFixture> cycle_fixture(const HostPtr& t, std::mt19937_64& rng, bool period_one,
                                                 size_t extra = 1) {
  auto pool = enumerate_curves(t, t->num_edges() > 6 ? 8 : 10);
  const auto& c = pool[rng() % pool.size()];
  std::vector<Multicurve> orbit{c};
  Encoding f = Encoding::identity(t);
  if (period_one) {
    f = twist(c, 1 + static_cast<long>(rng() % 3));
  } else {
    auto autos = automorphisms(t);
    if (autos.empty()) return std::nullopt;
    f = autos[rng() % autos.size()];
    for (Multicurve x = f.act(c); !(x == c); x = f.act(x)) {
      orbit.push_back(x);
      if (orbit.size() > 12) return std::nullopt;
    }
  }
  CurveSystem sys(t, {}, {});
  for (size_t i = 0; i < orbit.size(); ++i) sys = sys.with_curve("c" + std::to_string(i + 1), orbit[i]);
  if (!check_independent(sys).independent) return std::nullopt;
  sys = grow(sys, pool, extra, rng);
  // Twisting along an orbit curve keeps the images of the whole system.
  f = f.compose(twist(orbit[rng() % orbit.size()], 1));

  auto h = random_word(pool, 2, rng);
  auto hinv = h.inverse();
  CurveSystem moved(t, {}, {});
  for (size_t i = 0; i < sys.size(); ++i) moved = moved.with_curve(sys.names[i], h.act(sys.curves[i]));
  return CycleFixture{moved, h.compose(f).compose(hinv), static_cast<int>(orbit.size())};
}

/// An independent system of `n` curves with a random twist word f giving an orbit-free Γ.
inline std::optional<std::pair<CurveSystem, Encoding>> orbit_free_fixture(const HostPtr& t, size_t n,
                                                                          std::mt19937_64& rng) {
  auto pool = enumerate_curves(t, t->num_edges() > 6 ? 8 : 10);
  auto sys = grow(CurveSystem(t, {}, {}), pool, n, rng);
  if (sys.size() != n) return std::nullopt;
  for (int attempt = 0; attempt < 10; ++attempt) {
    auto f = random_word(pool, 2, rng);
    if (!find_orbit(build_gamma(sys.with_map(f)))) return std::pair{sys, f};
  }
  return std::nullopt;
}

}  // namespace fixtures
