#include "pacurve/multicurve.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pacurve {

namespace {

struct Dsu {
  explicit Dsu(long n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0L); }
  long find(long x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(long a, long b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<long> parent;
};

// Machine-size view of a normal multicurve: strand points on every edge are
// numbered along the direction of the edge's first slot.
struct Strands {
  const Triangulation& host;
  std::vector<long> w;
  std::vector<long> base;
  long total = 0;

  Strands(const Triangulation& t, const Weights& weights) : host(t) {
    Weight sum = total_weight(weights);
    if (sum > kMaxTracedWeight) throw std::length_error("multicurve too heavy to trace (total weight " + to_string(sum) + ")");
    w.resize(weights.size());
    base.resize(weights.size());
    for (size_t e = 0; e < weights.size(); ++e) {
      w[e] = weights[e].get_si();
      base[e] = total;
      total += w[e];
    }
  }
  long slot_weight(int slot) const { return w[host.edge(slot)]; }
  bool reversed(int slot) const { return host.edge_slots(host.edge(slot))[0] != slot; }
  long point(int slot, long local) const {
    int e = host.edge(slot);
    return reversed(slot) ? base[e] + w[e] - 1 - local : base[e] + local;
  }
  // Corner arcs at corner k of triangle t (between slot k-1 and slot k).
  long corner(int t, int k) const {
    long a = slot_weight(3 * t + (k + 2) % 3);
    long b = slot_weight(3 * t + k);
    long c = slot_weight(3 * t + (k + 1) % 3);
    return (a + b - c) / 2;
  }
};

// Strand tracing: which component (grouped by coordinates) each point lies on.
struct Trace {
  std::vector<CurveComponent> groups;
  std::vector<int> group_of_point;
};

Trace trace(const Multicurve& m) {
  const Triangulation& t = m.host();
  Strands st(t, m.weights());
  Dsu dsu(st.total);
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    for (int k = 0; k < 3; ++k) {
      long n = st.corner(tri, k);
      int out_slot = 3 * tri + k;
      int in_slot = 3 * tri + (k + 2) % 3;
      long in_w = st.slot_weight(in_slot);
      for (long j = 0; j < n; ++j) dsu.unite(st.point(out_slot, j), st.point(in_slot, in_w - 1 - j));
    }
  }
  std::map<long, size_t> component_index;
  std::vector<std::vector<long>> counts;
  std::vector<size_t> component_of_point(static_cast<size_t>(st.total));
  for (int e = 0; e < t.num_edges(); ++e) {
    for (long j = 0; j < st.w[e]; ++j) {
      long p = st.base[e] + j;
      long r = dsu.find(p);
      auto it = component_index.find(r);
      if (it == component_index.end()) {
        it = component_index.emplace(r, counts.size()).first;
        counts.emplace_back(static_cast<size_t>(t.num_edges()), 0L);
      }
      counts[it->second][e] += 1;
      component_of_point[p] = it->second;
    }
  }
  Trace out;
  std::map<std::vector<long>, int> group_index;
  std::vector<int> group_of_component(counts.size());
  for (size_t c = 0; c < counts.size(); ++c) {
    auto it = group_index.find(counts[c]);
    if (it == group_index.end()) {
      Weights w(counts[c].size());
      for (size_t e = 0; e < w.size(); ++e) w[e] = counts[c][e];
      it = group_index.emplace(counts[c], static_cast<int>(out.groups.size())).first;
      out.groups.push_back(CurveComponent{Multicurve(m.host_ptr(), std::move(w)), 0});
    }
    out.groups[it->second].multiplicity += 1;
    group_of_component[c] = it->second;
  }
  out.group_of_point.resize(static_cast<size_t>(st.total));
  for (long p = 0; p < st.total; ++p) out.group_of_point[p] = group_of_component[component_of_point[p]];
  return out;
}

}  // namespace

bool same_host(const Triangulation& a, const Triangulation& b) { return &a == &b || a == b; }

Multicurve::Multicurve(HostPtr host, Weights weights) : host_(std::move(host)), weights_(std::move(weights)) {
  if (!host_) throw std::invalid_argument("multicurve needs a host triangulation");
  if (static_cast<int>(weights_.size()) != host_->num_edges()) {
    throw NormalCurveError("expected " + std::to_string(host_->num_edges()) + " weights, got " +
                           std::to_string(weights_.size()));
  }
  for (const auto& x : weights_) {
    if (sgn(x) < 0) throw NormalCurveError("weights must be non-negative");
  }
}

Multicurve Multicurve::empty(HostPtr host) {
  Weights w(static_cast<size_t>(host->num_edges()), Weight(0));
  return Multicurve(std::move(host), std::move(w));
}

bool Multicurve::is_empty() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Weight& x) { return sgn(x) == 0; });
}

Multicurve Multicurve::operator+(const Multicurve& other) const {
  if (!same_host(host(), other.host())) throw TopologyError("multicurves live on different triangulations");
  Weights w = weights_;
  for (size_t e = 0; e < w.size(); ++e) w[e] += other.weights_[e];
  return Multicurve(host_, std::move(w));
}

bool Multicurve::operator==(const Multicurve& other) const {
  return weights_ == other.weights_ && same_host(host(), other.host());
}

bool Multicurve::operator<(const Multicurve& other) const { return weights_ < other.weights_; }

void check_normal(const Triangulation& host, const Weights& w) {
  if (static_cast<int>(w.size()) != host.num_edges()) throw NormalCurveError("weight vector has the wrong length");
  for (int e = 0; e < host.num_edges(); ++e) {
    if (sgn(w[e]) < 0) throw NormalCurveError("negative weight on edge " + std::to_string(e));
    if (host.is_boundary_edge(e) && sgn(w[e]) != 0) {
      throw NormalCurveError("boundary edge " + std::to_string(e) + " carries weight");
    }
  }
  for (int t = 0; t < host.num_triangles(); ++t) {
    const Weight& a = w[host.edge(3 * t)];
    const Weight& b = w[host.edge(3 * t + 1)];
    const Weight& c = w[host.edge(3 * t + 2)];
    if (a > b + c || b > a + c || c > a + b) {
      throw NormalCurveError("triangle inequality fails in triangle " + std::to_string(t));
    }
    Weight sum = a + b + c;
    if (mpz_odd_p(sum.get_mpz_t())) throw NormalCurveError("odd weight sum in triangle " + std::to_string(t));
  }
}

std::vector<CurveComponent> validate(const Multicurve& m) {
  check_normal(m.host(), m.weights());
  return trace(m).groups;
}

Weights flip_weights(const Triangulation& host, const Weights& w, int edge) {
  FlipSquare sq = host.square(edge);
  Weights out = w;
  Weight ac = w[sq.sides[0]] + w[sq.sides[2]];
  Weight bd = w[sq.sides[1]] + w[sq.sides[3]];
  out[edge] = (ac > bd ? ac : bd) - w[edge];
  return out;
}

Multicurve transform_under_flip(const Multicurve& m, int edge) {
  Weights w = flip_weights(m.host(), m.weights(), edge);
  auto flipped = std::make_shared<const Triangulation>(m.host().flip(edge));
  return Multicurve(std::move(flipped), std::move(w));
}

std::vector<Weights> vertex_links(const Triangulation& host) {
  std::vector<Weights> out;
  for (int v = 0; v < host.num_vertices(); ++v) {
    auto link = host.vertex_link(v);
    Weights w(link.begin(), link.end());
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

void require_single(const Multicurve& c, const char* what) {
  auto comps = validate(c);
  if (comps.size() != 1 || comps[0].multiplicity != 1) {
    throw NormalCurveError(std::string(what) + ": expected a single connected curve, got " +
                           std::to_string(comps.size()) + " component class(es)");
  }
}

}  // namespace

bool is_essential(const Multicurve& curve) {
  require_single(curve, "is_essential");
  for (const auto& link : vertex_links(curve.host())) {
    if (link == curve.weights()) return false;
  }
  return true;
}

bool is_parallel(const Multicurve& c1, const Multicurve& c2) {
  if (!same_host(c1.host(), c2.host())) throw TopologyError("is_parallel: curves live on different triangulations");
  return c1.weights() == c2.weights();
}

bool are_disjoint(const Multicurve& c1, const Multicurve& c2) {
  require_single(c1, "are_disjoint");
  require_single(c2, "are_disjoint");
  auto comps = validate(c1 + c2);
  if (c1 == c2) return comps.size() == 1 && comps[0].multiplicity == 2;
  if (comps.size() != 2) return false;
  bool fwd = comps[0].curve == c1 && comps[1].curve == c2;
  bool rev = comps[0].curve == c2 && comps[1].curve == c1;
  return (fwd || rev) && comps[0].multiplicity == 1 && comps[1].multiplicity == 1;
}

std::vector<CutPiece> cut_along(const Multicurve& m) {
  check_normal(m.host(), m.weights());
  const Triangulation& t = m.host();
  Trace tr = trace(m);
  Strands st(t, m.weights());

  // Regions inside triangle tri: index 0 is the central region, then the corner
  // strips (corner k, depth j), j = 0 touching the vertex.
  std::vector<long> region_base(static_cast<size_t>(t.num_triangles()) + 1, 0);
  std::vector<std::array<long, 3>> corner_count(static_cast<size_t>(t.num_triangles()));
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    long n = 1;
    for (int k = 0; k < 3; ++k) {
      corner_count[tri][k] = st.corner(tri, k);
      n += corner_count[tri][k];
    }
    region_base[tri + 1] = region_base[tri] + n;
  }
  auto region = [&](int tri, int k, long depth) {
    const auto& nc = corner_count[tri];
    if (depth >= nc[k]) return region_base[tri];
    long offset = 1;
    for (int i = 0; i < k; ++i) offset += nc[i];
    return region_base[tri] + offset + depth;
  };
  // Region next to segment p (between points p-1 and p) of a slot.
  auto region_at = [&](int slot, long p) {
    int tri = slot / 3;
    int k = slot % 3;
    long nk = corner_count[tri][k];
    return p <= nk ? region(tri, k, p) : region(tri, (k + 1) % 3, st.slot_weight(slot) - p);
  };

  const long num_regions = region_base.back();
  Dsu regions(num_regions);
  std::vector<std::pair<long, long>> segments;  // (a region of the segment, count)
  for (int e = 0; e < t.num_edges(); ++e) {
    const auto& es = t.edge_slots(e);
    long we = st.w[e];
    for (long q = 0; q <= we; ++q) {
      long a = region_at(es[0], q);
      if (es[1] != kUnglued) regions.unite(a, region_at(es[1], we - q));
      segments.emplace_back(a, 1);
    }
  }

  std::map<long, size_t> piece_of_root;
  std::vector<CutPiece> pieces;
  auto piece = [&](long r) -> CutPiece& {
    long root = regions.find(r);
    auto it = piece_of_root.find(root);
    if (it == piece_of_root.end()) {
      it = piece_of_root.emplace(root, pieces.size()).first;
      pieces.emplace_back();
    }
    return pieces[it->second];
  };
  // Piece order follows the lowest region index.
  for (long r = 0; r < num_regions; ++r) piece(r).euler_characteristic += 1;
  for (const auto& [r, c] : segments) piece(r).euler_characteristic -= static_cast<int>(c);
  std::vector<char> vertex_done(static_cast<size_t>(t.num_vertices()), 0);
  for (int s = 0; s < t.num_slots(); ++s) {
    int v = t.corner_vertex(s);
    if (vertex_done[v]) continue;
    vertex_done[v] = 1;
    CutPiece& p = piece(region(s / 3, s % 3, 0));
    if (t.ideal()) {
      p.punctures += 1;
    } else {
      p.vertices += 1;
      p.euler_characteristic += 1;
    }
  }

  // Boundary circles: node 2p+side for each strand point p; side 0 faces lower indices.
  Dsu sides(2 * st.total);
  auto node = [&](int slot, long local, int local_side) {
    long p = st.point(slot, local);
    int side = st.reversed(slot) ? 1 - local_side : local_side;
    return 2 * p + side;
  };
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    for (int k = 0; k < 3; ++k) {
      int out_slot = 3 * tri + k;
      int in_slot = 3 * tri + (k + 2) % 3;
      long in_w = st.slot_weight(in_slot);
      for (long j = 0; j < corner_count[tri][k]; ++j) {
        sides.unite(node(out_slot, j, 0), node(in_slot, in_w - 1 - j, 1));
        sides.unite(node(out_slot, j, 1), node(in_slot, in_w - 1 - j, 0));
      }
    }
  }
  std::map<long, char> circle_seen;
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    for (int k = 0; k < 3; ++k) {
      int out_slot = 3 * tri + k;
      for (long j = 0; j < corner_count[tri][k]; ++j) {
        for (int side = 0; side < 2; ++side) {
          long root = sides.find(node(out_slot, j, side));
          if (circle_seen.count(root)) continue;
          circle_seen[root] = 1;
          CutPiece& p = piece(region(tri, k, j + side));
          p.boundary_circles += 1;
          p.boundary_components.push_back(tr.group_of_point[st.point(out_slot, j)]);
        }
      }
    }
  }
  for (auto& p : pieces) std::sort(p.boundary_components.begin(), p.boundary_components.end());
  return pieces;
}

bool is_isolating(const Multicurve& curve) {
  if (!is_essential(curve)) return false;
  auto pieces = cut_along(curve);
  if (pieces.size() != 2) return false;
  return std::any_of(pieces.begin(), pieces.end(), [](const CutPiece& p) { return p.punctures + p.vertices == 0; });
}

void for_each_normal_vector(const Triangulation& host, int max_total, const std::function<bool(const Weights&)>& visit) {
  const int ne = host.num_edges();
  // Triangles become checkable once their highest edge is assigned.
  std::vector<std::vector<int>> closes(static_cast<size_t>(ne));
  for (int t = 0; t < host.num_triangles(); ++t) {
    int top = std::max({host.edge(3 * t), host.edge(3 * t + 1), host.edge(3 * t + 2)});
    closes[top].push_back(t);
  }
  std::vector<long> w(static_cast<size_t>(ne), 0);
  bool stop = false;
  auto triangle_ok = [&](int t) {
    long a = w[host.edge(3 * t)], b = w[host.edge(3 * t + 1)], c = w[host.edge(3 * t + 2)];
    return a <= b + c && b <= a + c && c <= a + b && (a + b + c) % 2 == 0;
  };
  std::function<void(int, long)> rec = [&](int e, long remaining) {
    if (stop) return;
    if (e == ne) {
      if (remaining != 0) return;
      Weights out(w.begin(), w.end());
      if (!visit(out)) stop = true;
      return;
    }
    long cap = host.is_boundary_edge(e) ? 0 : remaining;
    for (long x = 0; x <= cap && !stop; ++x) {
      w[e] = x;
      bool ok = true;
      for (int t : closes[e]) ok = ok && triangle_ok(t);
      if (ok) rec(e + 1, remaining - x);
    }
    w[e] = 0;
  };
  for (int total = 1; total <= max_total && !stop; ++total) rec(0, total);
}

std::vector<Multicurve> enumerate_curves(const HostPtr& host, int max_total) {
  auto links = vertex_links(*host);
  std::vector<Multicurve> out;
  for_each_normal_vector(*host, max_total, [&](const Weights& w) {
    if (std::find(links.begin(), links.end(), w) != links.end()) return true;
    Multicurve m(host, w);
    auto comps = trace(m).groups;
    if (comps.size() == 1 && comps[0].multiplicity == 1) out.push_back(std::move(m));
    return true;
  });
  return out;
}

}  // namespace pacurve
