#pragma once

#include <variant>
#include <vector>

#include "pacurve/multicurve.hpp"

namespace pacurve {

struct FlipMove {
  int edge = -1;
  bool operator==(const FlipMove&) const = default;
};

/// Relabels the current triangulation; the target is current.relabel(iso).
struct RelabelMove {
  Isomorphism iso;
  bool operator==(const RelabelMove&) const = default;
};

using Move = std::variant<FlipMove, RelabelMove>;

/// A mapping class as a checked sequence of flips and relabelings that starts
/// and ends at the same (source) triangulation.
///
/// Acting on a curve transports its coordinates through every flip and permutes
/// them at every relabeling. compose(a, b) acts as a after b.
class Encoding {
 public:
  static Encoding identity(HostPtr source);
  /// Replays `moves` from `source`; throws TopologyError if a move does not
  /// apply or the final triangulation differs from the source.
  static Encoding from_moves(HostPtr source, std::vector<Move> moves);

  const Triangulation& source() const { return *source_; }
  const HostPtr& source_ptr() const { return source_; }
  const std::vector<Move>& moves() const { return moves_; }
  size_t flip_count() const;

  Weights act(Weights w) const;
  Multicurve act(const Multicurve& m) const;

  /// this ∘ first.
  Encoding compose(const Encoding& first) const;
  Encoding inverse() const;
  Encoding power(long k) const;

 private:
  struct FlipOp {
    int edge;
    std::array<int, 4> sides;
  };
  struct PermuteOp {
    std::vector<int> edges;
  };
  using Op = std::variant<FlipOp, PermuteOp>;

  Encoding(HostPtr source, std::vector<Move> moves, std::vector<Op> ops)
      : source_(std::move(source)), moves_(std::move(moves)), ops_(std::move(ops)) {}

  /// Triangulations before each move, plus the final one.
  std::vector<Triangulation> replay() const;

  friend class EncodingBuilder;

  HostPtr source_;
  std::vector<Move> moves_;
  std::vector<Op> ops_;
};

/// Accumulates moves from a source triangulation, checking each one.
class EncodingBuilder {
 public:
  explicit EncodingBuilder(HostPtr source);

  const Triangulation& current() const { return current_; }
  void flip(int edge);
  void relabel(const Isomorphism& iso);
  /// Relabels onto `target` with the first isomorphism whose edge map equals `edge_map`.
  void relabel_onto(const Triangulation& target, const std::vector<int>& edge_map);
  void append(const std::vector<Move>& moves);
  const std::vector<Move>& moves() const { return moves_; }
  Encoding finish() const;

 private:
  HostPtr source_;
  Triangulation current_;
  std::vector<Move> moves_;
  std::vector<Encoding::Op> ops_;
};

}  // namespace pacurve
