#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pacurve {

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kUnglued = -1;

/// The four sides of the quadrilateral around a flippable edge, in cyclic order.
/// Opposite pairs are (sides[0], sides[2]) and (sides[1], sides[3]).
struct FlipSquare {
  int edge = -1;
  std::array<int, 4> sides{};
};

/// A combinatorial relabeling from one triangulation onto another. `slots` maps
/// slot indices, `edges` maps edge labels; both are bijections.
struct Isomorphism {
  std::vector<int> slots;
  std::vector<int> edges;

  bool operator==(const Isomorphism&) const = default;
  Isomorphism inverse() const;
  /// this ∘ first: apply `first`, then this.
  Isomorphism after(const Isomorphism& first) const;
};

/// An oriented triangulated surface.
///
/// Triangle t owns slots 3t, 3t+1, 3t+2 listed counterclockwise; slot 3t+i runs
/// from corner i to corner i+1. Each slot carries an edge label and is glued to
/// at most one other slot (its mate). Every gluing reverses slot direction, so the
/// surface is oriented by construction. In an ideal triangulation every vertex is
/// a puncture and does not count towards the Euler characteristic.
class Triangulation {
 public:
  Triangulation(std::vector<int> slot_edges, std::vector<int> slot_mates, bool ideal);

  /// Builds from triangles given as three side keys (counterclockwise). Keys that
  /// occur twice are glued; each distinct key becomes one edge. Edge labels are
  /// assigned in order of `key_order` first, then by first appearance.
  static Triangulation from_side_keys(const std::vector<std::array<std::string, 3>>& triangles, bool ideal,
                                      const std::vector<std::string>& key_order = {});

  int num_triangles() const { return static_cast<int>(edges_.size() / 3); }
  int num_slots() const { return static_cast<int>(edges_.size()); }
  int num_edges() const { return static_cast<int>(edge_slots_.size()); }
  int num_vertices() const { return num_vertices_; }
  bool ideal() const { return ideal_; }

  int edge(int slot) const { return edges_[slot]; }
  int mate(int slot) const { return mates_[slot]; }
  /// Slots carrying edge e; the second is kUnglued for a boundary edge.
  const std::array<int, 2>& edge_slots(int e) const { return edge_slots_[e]; }
  bool is_boundary_edge(int e) const { return edge_slots_[e][1] == kUnglued; }
  /// Vertex at the start of `slot`.
  int corner_vertex(int slot) const { return corner_vertex_[slot]; }
  /// Vertex at the end of `slot`.
  int end_vertex(int slot) const { return corner_vertex_[next_in_triangle(slot)]; }

  static int next_in_triangle(int slot) { return slot - slot % 3 + (slot % 3 + 1) % 3; }
  static int prev_in_triangle(int slot) { return slot - slot % 3 + (slot % 3 + 2) % 3; }

  const std::vector<int>& slot_edges() const { return edges_; }
  const std::vector<int>& slot_mates() const { return mates_; }

  int euler_characteristic() const;
  int genus() const;
  int punctures() const { return ideal_ ? num_vertices_ : 0; }
  int boundary_edges() const;

  /// Number of ends of each edge at vertex v (0, 1 or 2).
  std::vector<int> vertex_link(int v) const;

  bool is_flippable(int e) const;
  FlipSquare square(int e) const;
  Triangulation flip(int e) const;

  /// Applies a relabeling (checked for validity) and returns the target.
  Triangulation relabel(const Isomorphism& iso) const;
  Isomorphism identity_isomorphism() const;

  /// Lexicographically least breadth-first code over all starting slots.
  std::vector<int> canonical_form() const;
  /// Every orientation-preserving isomorphism onto `other`, ordered by the image of slot 0.
  std::vector<Isomorphism> isomorphisms_to(const Triangulation& other) const;
  /// The isomorphism realizing the shared canonical form, if the two are isomorphic.
  std::optional<Isomorphism> isomorphism_to(const Triangulation& other) const;

  bool operator==(const Triangulation& other) const {
    return ideal_ == other.ideal_ && edges_ == other.edges_ && mates_ == other.mates_;
  }

 private:
  void check_and_index();
  std::optional<Isomorphism> propagate(const Triangulation& other, int start_image) const;
  std::vector<int> bfs_code(int start, std::vector<int>* slot_order) const;

  std::vector<int> edges_;
  std::vector<int> mates_;
  bool ideal_ = false;
  std::vector<std::array<int, 2>> edge_slots_;
  std::vector<int> corner_vertex_;
  int num_vertices_ = 0;
};

}  // namespace pacurve
