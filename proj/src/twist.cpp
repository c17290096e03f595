#include "pacurve/twist.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace pacurve {

namespace {

struct Recipe {
  std::vector<Move> prefix;  // shortening flips
  std::vector<Move> plus;    // one positive twist on the shortened triangulation
  std::vector<Move> minus;
  std::vector<Move> suffix;  // undoes the prefix
};

std::string cache_key(const Multicurve& c) {
  std::ostringstream os;
  const Triangulation& t = c.host();
  os << t.ideal() << ':';
  for (int e : t.slot_edges()) os << e << ',';
  os << ':';
  for (int m : t.slot_mates()) os << m << ',';
  os << ':';
  for (const auto& w : c.weights()) os << w.get_str() << ',';
  return os.str();
}

std::vector<int> identity_map(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Moves that undo `flips` applied from `start`, beginning at the triangulation they reach.
std::vector<Move> undo_flips(const Triangulation& start, const std::vector<int>& flips) {
  std::vector<Triangulation> states{start};
  for (int e : flips) states.push_back(states.back().flip(e));
  EncodingBuilder b(std::make_shared<const Triangulation>(states.back()));
  for (size_t i = flips.size(); i-- > 0;) {
    b.flip(flips[i]);
    b.relabel_onto(states[i], identity_map(states[i].num_edges()));
  }
  return b.moves();
}

// The annulus block for a curve of total weight two crossing edges x and y.
void annulus_block(const HostPtr& host, const Weights& w, Recipe& r) {
  const Triangulation& t = *host;
  std::vector<int> ones;
  for (int e = 0; e < t.num_edges(); ++e) {
    if (w[e] == 1) ones.push_back(e);
  }
  if (ones.size() != 2) throw TopologyError("short curve does not cross two edges once");
  int x = ones[0], y = ones[1];
  auto slots = t.edge_slots(x);
  int t1 = slots[0] / 3, t2 = slots[1] / 3;
  if (t1 == t2) throw TopologyError("short curve does not bound a two-triangle annulus");
  // Orient so that each triangle reads (z, x, y) counterclockwise.
  auto order_in = [&](int tri) {
    for (int i = 0; i < 3; ++i) {
      int z = 3 * tri + i;
      if (w[t.edge(z)] != 0) continue;
      return std::pair{t.edge(3 * tri + (i + 1) % 3), t.edge(3 * tri + (i + 2) % 3)};
    }
    throw TopologyError("short curve misses a triangle side pattern");
  };
  auto o1 = order_in(t1);
  auto o2 = order_in(t2);
  if (o1 != o2) throw TopologyError("annulus sides disagree on orientation");
  x = o1.first;
  y = o1.second;

  std::vector<int> swap = identity_map(t.num_edges());
  std::swap(swap[x], swap[y]);
  EncodingBuilder plus(host);
  plus.flip(y);
  plus.relabel_onto(t, swap);
  EncodingBuilder minus(host);
  minus.flip(x);
  minus.relabel_onto(t, swap);
  r.plus = plus.moves();
  r.minus = minus.moves();
}

// Side of `c` free of vertices and punctures, or nullptr.
const CutPiece* empty_side(const std::vector<CutPiece>& pieces) {
  for (const auto& p : pieces) {
    if (p.punctures + p.vertices == 0) return &p;
  }
  return nullptr;
}

// Whether `a` (disjoint from the isolating curve c) lies on c's empty side.
bool on_empty_side(const Multicurve& c, const Multicurve& a) {
  auto comps = validate(c + a);
  int ci = -1;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].curve == c) ci = static_cast<int>(i);
  }
  if (ci < 0) return false;
  int full = 0;
  bool ok = false;
  for (const auto& p : cut_along(c + a)) {
    if (p.punctures + p.vertices == 0) continue;
    ++full;
    ok = p.boundary_components == std::vector<int>{ci};
  }
  return full == 1 && ok;
}

Encoding twist_on_host(const Multicurve& curve, long power);

void chain_block(const Multicurve& c, Recipe& r) {
  auto pieces = cut_along(c);
  const CutPiece* side = empty_side(pieces);
  if (side == nullptr) throw TopologyError("curve has no empty side");
  if (side->euler_characteristic != -1) {
    // TODO: support isolating curves whose empty side has genus two or more via the longer chain relation.
    throw TopologyError("twist along a curve cutting off genus two or more is not supported");
  }
  const HostPtr& host = c.host_ptr();
  for (int cap = 4; cap <= 16; cap += 4) {
    std::vector<Multicurve> cands;
    for (const auto& a : enumerate_curves(host, cap)) {
      if (a == c || !are_disjoint(a, c) || is_isolating(a) || !on_empty_side(c, a)) continue;
      cands.push_back(a);
    }
    std::map<size_t, Encoding> twists;
    auto tw = [&](size_t i) -> const Encoding& {
      auto it = twists.find(i);
      if (it == twists.end()) it = twists.emplace(i, twist_on_host(cands[i], 1)).first;
      return it->second;
    };
    for (size_t i = 0; i < cands.size(); ++i) {
      for (size_t j = 0; j < cands.size(); ++j) {
        if (i == j || are_disjoint(cands[i], cands[j])) continue;
        Encoding ab = tw(i).compose(tw(j));
        if (!(ab.act(cands[i]) == cands[j])) continue;
        Encoding unit = ab.power(6);
        if (!(unit.act(c) == c) || !(unit.act(cands[i]) == cands[i])) {
          throw TopologyError("chain relation check failed");
        }
        r.plus = unit.moves();
        r.minus = unit.inverse().moves();
        return;
      }
    }
  }
  throw TopologyError("no curve pair found on the empty side of an isolating curve");
}

std::shared_ptr<const Recipe> build_recipe(const Multicurve& c) {
  auto rec = std::make_shared<Recipe>();
  Shortening s = shorten(c);
  for (int e : s.flips) rec->prefix.push_back(FlipMove{e});
  rec->suffix = undo_flips(c.host(), s.flips);
  Multicurve short_curve(s.host, s.weights);
  if (short_curve.total() == 2) {
    annulus_block(s.host, s.weights, *rec);
  } else if (is_isolating(short_curve)) {
    chain_block(short_curve, *rec);
  } else {
    throw TopologyError("could not shorten curve to an annulus");
  }
  return rec;
}

std::shared_ptr<const Recipe> recipe_for(const Multicurve& c) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Recipe>> cache;
  std::string key = cache_key(c);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto rec = build_recipe(c);
  std::lock_guard lock(mu);
  return cache.emplace(key, rec).first->second;
}

Encoding twist_on_host(const Multicurve& curve, long power) {
  if (validate(curve).size() != 1 || !is_essential(curve)) throw NormalCurveError("twist needs an essential connected curve");
  if (power == 0) return Encoding::identity(curve.host_ptr());
  auto rec = recipe_for(curve);
  EncodingBuilder b(curve.host_ptr());
  b.append(rec->prefix);
  const auto& unit = power > 0 ? rec->plus : rec->minus;
  for (long i = 0; i < (power > 0 ? power : -power); ++i) b.append(unit);
  b.append(rec->suffix);
  return b.finish();
}

}  // namespace

Shortening shorten(const Multicurve& curve, int lookahead) {
  Triangulation t = curve.host();
  Weights w = curve.weights();
  std::vector<int> flips;
  Weight total = total_weight(w);

  // Depth-first over flip sequences up to `depth`, returning the first that lowers the total.
  std::function<bool(const Triangulation&, const Weights&, int, int, std::vector<int>&)> search =
      [&](const Triangulation& tt, const Weights& ww, int depth, int last, std::vector<int>& path) {
        if (depth == 0) return false;
        for (int e = 0; e < tt.num_edges(); ++e) {
          if (e == last || !tt.is_flippable(e)) continue;
          Weights nw = flip_weights(tt, ww, e);
          path.push_back(e);
          if (total_weight(nw) < total) return true;
          if (search(tt.flip(e), nw, depth - 1, e, path)) return true;
          path.pop_back();
        }
        return false;
      };

  while (total > 2) {
    int best = -1;
    Weight best_total = total;
    for (int e = 0; e < t.num_edges(); ++e) {
      if (w[e] == 0 || !t.is_flippable(e)) continue;
      Weight nt = total - w[e] + flip_weights(t, w, e)[e];
      if (nt < best_total) {
        best_total = nt;
        best = e;
      }
    }
    std::vector<int> steps;
    if (best >= 0) {
      steps.push_back(best);
    } else {
      bool found = false;
      for (int d = 2; d <= lookahead && !found; ++d) {
        steps.clear();
        found = search(t, w, d, -1, steps);
      }
      if (!found) break;
    }
    for (int e : steps) {
      w = flip_weights(t, w, e);
      t = t.flip(e);
      flips.push_back(e);
    }
    total = total_weight(w);
  }
  return Shortening{flips, std::make_shared<const Triangulation>(std::move(t)), std::move(w)};
}

Encoding twist(const Multicurve& curve, long power) { return twist_on_host(curve, power); }

bool intersects(const Multicurve& a, const Multicurve& b) { return !(twist(b, 1).act(a) == a); }

std::vector<Multicurve> probe_curves(const HostPtr& host) {
  const size_t want = 2 * static_cast<size_t>(host->num_edges());
  std::vector<Multicurve> out;
  for (int cap = 4; cap <= 16; ++cap) {
    out = enumerate_curves(host, cap);
    if (out.size() >= want) break;
  }
  return out;
}

bool equal_on(const Encoding& e1, const Encoding& e2, const std::vector<Multicurve>& probes) {
  if (!same_host(e1.source(), e2.source())) throw TopologyError("equal_on: encodings have different sources");
  const auto& use = probes.empty() ? probe_curves(e1.source_ptr()) : probes;
  for (const auto& p : use) {
    if (!(e1.act(p) == e2.act(p))) return false;
  }
  return true;
}

}  // namespace pacurve
