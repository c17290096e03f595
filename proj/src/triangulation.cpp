#include "pacurve/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace pacurve {

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

}  // namespace

Isomorphism Isomorphism::inverse() const {
  Isomorphism inv;
  inv.slots.assign(slots.size(), 0);
  inv.edges.assign(edges.size(), 0);
  for (size_t i = 0; i < slots.size(); ++i) inv.slots[slots[i]] = static_cast<int>(i);
  for (size_t i = 0; i < edges.size(); ++i) inv.edges[edges[i]] = static_cast<int>(i);
  return inv;
}

Isomorphism Isomorphism::after(const Isomorphism& first) const {
  Isomorphism out;
  out.slots.resize(first.slots.size());
  out.edges.resize(first.edges.size());
  for (size_t i = 0; i < first.slots.size(); ++i) out.slots[i] = slots[first.slots[i]];
  for (size_t i = 0; i < first.edges.size(); ++i) out.edges[i] = edges[first.edges[i]];
  return out;
}

Triangulation::Triangulation(std::vector<int> slot_edges, std::vector<int> slot_mates, bool ideal)
    : edges_(std::move(slot_edges)), mates_(std::move(slot_mates)), ideal_(ideal) {
  check_and_index();
}

Triangulation Triangulation::from_side_keys(const std::vector<std::array<std::string, 3>>& triangles, bool ideal,
                                            const std::vector<std::string>& key_order) {
  std::map<std::string, std::vector<int>> occurrences;
  std::vector<std::string> appearance;
  for (size_t t = 0; t < triangles.size(); ++t) {
    for (int i = 0; i < 3; ++i) {
      const auto& key = triangles[t][i];
      auto& occ = occurrences[key];
      if (occ.empty()) appearance.push_back(key);
      occ.push_back(static_cast<int>(3 * t) + i);
    }
  }
  std::map<std::string, int> label;
  int next = 0;
  for (const auto& key : key_order) {
    if (occurrences.count(key) && !label.count(key)) label[key] = next++;
  }
  for (const auto& key : appearance) {
    if (!label.count(key)) label[key] = next++;
  }
  std::vector<int> edges(3 * triangles.size());
  std::vector<int> mates(3 * triangles.size(), kUnglued);
  for (const auto& [key, occ] : occurrences) {
    if (occ.size() > 2) throw TopologyError("side key '" + key + "' used more than twice");
    for (int s : occ) edges[s] = label[key];
    if (occ.size() == 2) {
      mates[occ[0]] = occ[1];
      mates[occ[1]] = occ[0];
    }
  }
  return Triangulation(std::move(edges), std::move(mates), ideal);
}

void Triangulation::check_and_index() {
  const int n = static_cast<int>(edges_.size());
  if (n == 0 || n % 3 != 0) throw TopologyError("slot count must be a positive multiple of 3");
  if (static_cast<int>(mates_.size()) != n) throw TopologyError("gluing size does not match slot count");

  int max_edge = -1;
  for (int e : edges_) {
    if (e < 0) throw TopologyError("negative edge label");
    max_edge = std::max(max_edge, e);
  }
  edge_slots_.assign(static_cast<size_t>(max_edge) + 1, {kUnglued, kUnglued});
  for (int s = 0; s < n; ++s) {
    auto& es = edge_slots_[edges_[s]];
    if (es[0] == kUnglued) {
      es[0] = s;
    } else if (es[1] == kUnglued) {
      es[1] = s;
    } else {
      throw TopologyError("edge " + std::to_string(edges_[s]) + " has more than two sides");
    }
  }
  for (int e = 0; e <= max_edge; ++e) {
    const auto& es = edge_slots_[e];
    if (es[0] == kUnglued) throw TopologyError("edge labels must be contiguous; missing " + std::to_string(e));
    if (es[1] == kUnglued) {
      if (mates_[es[0]] != kUnglued) throw TopologyError("boundary edge slot is glued");
    } else if (mates_[es[0]] != es[1] || mates_[es[1]] != es[0]) {
      throw TopologyError("gluing does not pair the two sides of edge " + std::to_string(e));
    }
  }
  for (int s = 0; s < n; ++s) {
    int m = mates_[s];
    if (m == kUnglued) continue;
    if (m < 0 || m >= n || m == s || mates_[m] != s) throw TopologyError("gluing is not a fixed-point-free involution");
  }

  DisjointSets corners(n);
  DisjointSets components(n / 3);
  for (int s = 0; s < n; ++s) {
    int m = mates_[s];
    if (m == kUnglued) continue;
    corners.unite(s, next_in_triangle(m));
    corners.unite(next_in_triangle(s), m);
    components.unite(s / 3, m / 3);
  }
  for (int t = 0; t < n / 3; ++t) {
    if (components.find(t) != 0) throw TopologyError("triangulation is not connected");
  }
  corner_vertex_.assign(static_cast<size_t>(n), -1);
  std::map<int, int> vertex_of_root;
  for (int s = 0; s < n; ++s) {
    int root = corners.find(s);
    auto it = vertex_of_root.find(root);
    if (it == vertex_of_root.end()) it = vertex_of_root.emplace(root, static_cast<int>(vertex_of_root.size())).first;
    corner_vertex_[s] = it->second;
  }
  num_vertices_ = static_cast<int>(vertex_of_root.size());
  if (euler_characteristic() >= 0) {
    throw TopologyError("surface must have negative Euler characteristic, got " + std::to_string(euler_characteristic()));
  }
}

int Triangulation::euler_characteristic() const {
  return num_triangles() - num_edges() + (ideal_ ? 0 : num_vertices_);
}

int Triangulation::boundary_edges() const {
  int count = 0;
  for (int e = 0; e < num_edges(); ++e) count += is_boundary_edge(e) ? 1 : 0;
  return count;
}

int Triangulation::genus() const {
  // Boundary circles: each boundary vertex starts exactly one boundary slot.
  std::map<int, int> start_at;
  for (int s = 0; s < num_slots(); ++s) {
    if (mates_[s] == kUnglued) start_at[corner_vertex(s)] = s;
  }
  int circles = 0;
  std::vector<char> seen(static_cast<size_t>(num_slots()), 0);
  for (const auto& [v, s0] : start_at) {
    if (seen[s0]) continue;
    ++circles;
    int s = s0;
    while (!seen[s]) {
      seen[s] = 1;
      auto it = start_at.find(end_vertex(s));
      if (it == start_at.end()) break;
      s = it->second;
    }
  }
  return (2 - euler_characteristic() - punctures() - circles) / 2;
}

std::vector<int> Triangulation::vertex_link(int v) const {
  std::vector<int> link(static_cast<size_t>(num_edges()), 0);
  for (int e = 0; e < num_edges(); ++e) {
    int s = edge_slots_[e][0];
    link[e] = (corner_vertex(s) == v ? 1 : 0) + (end_vertex(s) == v ? 1 : 0);
  }
  return link;
}

bool Triangulation::is_flippable(int e) const {
  if (e < 0 || e >= num_edges()) return false;
  const auto& es = edge_slots_[e];
  return es[1] != kUnglued && es[0] / 3 != es[1] / 3;
}

FlipSquare Triangulation::square(int e) const {
  if (e < 0 || e >= num_edges()) throw TopologyError("unknown edge id " + std::to_string(e));
  if (!is_flippable(e)) throw TopologyError("edge " + std::to_string(e) + " is not flippable");
  int s = edge_slots_[e][0];
  int m = edge_slots_[e][1];
  return FlipSquare{e,
                    {edges_[next_in_triangle(m)], edges_[prev_in_triangle(m)], edges_[next_in_triangle(s)],
                     edges_[prev_in_triangle(s)]}};
}

Triangulation Triangulation::flip(int e) const {
  if (e < 0 || e >= num_edges()) throw TopologyError("unknown edge id " + std::to_string(e));
  if (!is_flippable(e)) throw TopologyError("edge " + std::to_string(e) + " is not flippable");
  const int s = edge_slots_[e][0];
  const int m = edge_slots_[e][1];
  const int t = s / 3;
  const int u = m / 3;
  // Old triangle t: s = P->Q, alpha = Q->R, beta = R->P.
  // Old triangle u: m = Q->P, gamma = P->S, delta = S->Q.
  // New t = (S->R, R->P, P->S), new u = (R->S, S->Q, Q->R).
  const int alpha = next_in_triangle(s);
  const int beta = prev_in_triangle(s);
  const int gamma = next_in_triangle(m);
  const int delta = prev_in_triangle(m);
  const std::array<std::pair<int, int>, 4> moved{
      {{beta, 3 * t + 1}, {gamma, 3 * t + 2}, {delta, 3 * u + 1}, {alpha, 3 * u + 2}}};
  auto new_position = [&](int old) {
    for (const auto& [o, n] : moved) {
      if (o == old) return n;
    }
    return old;
  };

  std::vector<int> edges = edges_;
  std::vector<int> mates = mates_;
  for (const auto& [o, n] : moved) edges[n] = edges_[o];
  edges[3 * t] = e;
  edges[3 * u] = e;
  for (const auto& [o, n] : moved) {
    int old_mate = mates_[o];
    if (old_mate == kUnglued) {
      mates[n] = kUnglued;
      continue;
    }
    int nm = new_position(old_mate);
    mates[n] = nm;
    if (nm == old_mate) mates[old_mate] = n;
  }
  mates[3 * t] = 3 * u;
  mates[3 * u] = 3 * t;
  return Triangulation(std::move(edges), std::move(mates), ideal_);
}

Triangulation Triangulation::relabel(const Isomorphism& iso) const {
  const int n = num_slots();
  if (static_cast<int>(iso.slots.size()) != n || static_cast<int>(iso.edges.size()) != num_edges()) {
    throw TopologyError("relabeling has the wrong size");
  }
  std::vector<char> hit_slot(static_cast<size_t>(n), 0), hit_edge(static_cast<size_t>(num_edges()), 0);
  for (int s = 0; s < n; ++s) {
    int img = iso.slots[s];
    if (img < 0 || img >= n || hit_slot[img]) throw TopologyError("relabeling is not a slot bijection");
    hit_slot[img] = 1;
    if (iso.slots[next_in_triangle(s)] != next_in_triangle(img)) {
      throw TopologyError("relabeling does not preserve triangle orientation");
    }
  }
  for (int e = 0; e < num_edges(); ++e) {
    int img = iso.edges[e];
    if (img < 0 || img >= num_edges() || hit_edge[img]) throw TopologyError("relabeling is not an edge bijection");
    hit_edge[img] = 1;
  }
  std::vector<int> edges(static_cast<size_t>(n)), mates(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    edges[iso.slots[s]] = iso.edges[edges_[s]];
    mates[iso.slots[s]] = mates_[s] == kUnglued ? kUnglued : iso.slots[mates_[s]];
  }
  return Triangulation(std::move(edges), std::move(mates), ideal_);
}

Isomorphism Triangulation::identity_isomorphism() const {
  Isomorphism iso;
  iso.slots.resize(static_cast<size_t>(num_slots()));
  iso.edges.resize(static_cast<size_t>(num_edges()));
  std::iota(iso.slots.begin(), iso.slots.end(), 0);
  std::iota(iso.edges.begin(), iso.edges.end(), 0);
  return iso;
}

std::optional<Isomorphism> Triangulation::propagate(const Triangulation& other, int start_image) const {
  const int n = num_slots();
  Isomorphism iso;
  iso.slots.assign(static_cast<size_t>(n), -1);
  iso.edges.assign(static_cast<size_t>(num_edges()), -1);
  std::vector<int> edge_preimage(static_cast<size_t>(num_edges()), -1);
  std::vector<int> tri_image(static_cast<size_t>(num_triangles()), -1);
  std::vector<char> tri_used(static_cast<size_t>(num_triangles()), 0);
  std::deque<int> queue;

  auto place_triangle = [&](int slot, int image) {
    int t = slot / 3;
    int u = image / 3;
    if (tri_image[t] != -1) return iso.slots[slot] == image;
    if (tri_used[u]) return false;
    tri_image[t] = u;
    tri_used[u] = 1;
    int rot = (image % 3 - slot % 3 + 3) % 3;
    for (int i = 0; i < 3; ++i) {
      iso.slots[3 * t + i] = 3 * u + (i + rot) % 3;
      queue.push_back(3 * t + i);
    }
    return true;
  };

  if (!place_triangle(0, start_image)) return std::nullopt;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    int b = iso.slots[a];
    int ea = edges_[a];
    int eb = other.edges_[b];
    if (iso.edges[ea] == -1 && edge_preimage[eb] == -1) {
      iso.edges[ea] = eb;
      edge_preimage[eb] = ea;
    } else if (iso.edges[ea] != eb || edge_preimage[eb] != ea) {
      return std::nullopt;
    }
    int ma = mates_[a];
    int mb = other.mates_[b];
    if ((ma == kUnglued) != (mb == kUnglued)) return std::nullopt;
    if (ma == kUnglued) continue;
    if (!place_triangle(ma, mb)) return std::nullopt;
  }
  return iso;
}

std::vector<Isomorphism> Triangulation::isomorphisms_to(const Triangulation& other) const {
  std::vector<Isomorphism> out;
  if (other.num_slots() != num_slots() || other.num_edges() != num_edges() || other.ideal_ != ideal_) return out;
  for (int b = 0; b < other.num_slots(); ++b) {
    if (auto iso = propagate(other, b)) out.push_back(std::move(*iso));
  }
  return out;
}

std::vector<int> Triangulation::bfs_code(int start, std::vector<int>* slot_order) const {
  const int n = num_slots();
  std::vector<int> order;  // new slot -> old slot
  order.reserve(static_cast<size_t>(n));
  std::vector<int> new_index(static_cast<size_t>(n), -1);
  std::vector<char> placed(static_cast<size_t>(num_triangles()), 0);
  auto place = [&](int slot) {
    placed[slot / 3] = 1;
    for (int i = 0; i < 3; ++i) {
      int s = slot - slot % 3 + (slot % 3 + i) % 3;
      new_index[s] = static_cast<int>(order.size());
      order.push_back(s);
    }
  };
  place(start);
  for (size_t k = 0; k < order.size(); ++k) {
    int m = mates_[order[k]];
    if (m != kUnglued && !placed[m / 3]) place(m);
  }
  std::vector<int> code;
  code.reserve(2 * static_cast<size_t>(n) + 1);
  code.push_back(ideal_ ? 1 : 0);
  std::vector<int> edge_label(static_cast<size_t>(num_edges()), -1);
  int next_label = 0;
  for (int s : order) {
    int& lbl = edge_label[edges_[s]];
    if (lbl == -1) lbl = next_label++;
    code.push_back(lbl);
    code.push_back(mates_[s] == kUnglued ? -1 : new_index[mates_[s]]);
  }
  if (slot_order) *slot_order = std::move(order);
  return code;
}

std::vector<int> Triangulation::canonical_form() const {
  std::vector<int> best;
  for (int s = 0; s < num_slots(); ++s) {
    auto code = bfs_code(s, nullptr);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::optional<Isomorphism> Triangulation::isomorphism_to(const Triangulation& other) const {
  if (other.num_slots() != num_slots() || other.num_edges() != num_edges() || other.ideal_ != ideal_) {
    return std::nullopt;
  }
  auto best_start = [](const Triangulation& t, std::vector<int>& code_out) {
    int best = 0;
    for (int s = 0; s < t.num_slots(); ++s) {
      auto code = t.bfs_code(s, nullptr);
      if (s == 0 || code < code_out) {
        code_out = std::move(code);
        best = s;
      }
    }
    return best;
  };
  std::vector<int> code_a, code_b;
  int start_a = best_start(*this, code_a);
  int start_b = best_start(other, code_b);
  if (code_a != code_b) return std::nullopt;
  std::vector<int> order_a, order_b;
  bfs_code(start_a, &order_a);
  other.bfs_code(start_b, &order_b);
  Isomorphism iso;
  iso.slots.assign(static_cast<size_t>(num_slots()), -1);
  iso.edges.assign(static_cast<size_t>(num_edges()), -1);
  for (size_t k = 0; k < order_a.size(); ++k) {
    iso.slots[order_a[k]] = order_b[k];
    iso.edges[edges_[order_a[k]]] = other.edges_[order_b[k]];
  }
  return iso;
}

}  // namespace pacurve
