#include "pacurve/encoding.hpp"

#include <algorithm>

namespace pacurve {

EncodingBuilder::EncodingBuilder(HostPtr source) : source_(std::move(source)), current_(*source_) {}

void EncodingBuilder::flip(int edge) {
  FlipSquare sq = current_.square(edge);  // throws if not flippable
  current_ = current_.flip(edge);
  moves_.push_back(FlipMove{edge});
  ops_.push_back(Encoding::FlipOp{edge, sq.sides});
}

void EncodingBuilder::relabel(const Isomorphism& iso) {
  current_ = current_.relabel(iso);
  moves_.push_back(RelabelMove{iso});
  ops_.push_back(Encoding::PermuteOp{iso.edges});
}

void EncodingBuilder::relabel_onto(const Triangulation& target, const std::vector<int>& edge_map) {
  for (const auto& iso : current_.isomorphisms_to(target)) {
    if (iso.edges == edge_map) {
      relabel(iso);
      return;
    }
  }
  throw TopologyError("no isomorphism with the requested edge map");
}

void EncodingBuilder::append(const std::vector<Move>& moves) {
  for (const auto& mv : moves) {
    if (const auto* f = std::get_if<FlipMove>(&mv)) {
      flip(f->edge);
    } else {
      relabel(std::get<RelabelMove>(mv).iso);
    }
  }
}

Encoding EncodingBuilder::finish() const {
  if (!(current_ == *source_)) throw TopologyError("move sequence does not return to its source triangulation");
  return Encoding(source_, moves_, ops_);
}

Encoding Encoding::identity(HostPtr source) { return Encoding(std::move(source), {}, {}); }

Encoding Encoding::from_moves(HostPtr source, std::vector<Move> moves) {
  EncodingBuilder b(std::move(source));
  b.append(moves);
  return b.finish();
}

size_t Encoding::flip_count() const {
  return static_cast<size_t>(
      std::count_if(moves_.begin(), moves_.end(), [](const Move& m) { return std::holds_alternative<FlipMove>(m); }));
}

Weights Encoding::act(Weights w) const {
  if (static_cast<int>(w.size()) != source_->num_edges()) throw TopologyError("weight vector does not match source");
  Weight ac, bd;
  Weights scratch(w.size());
  for (const auto& op : ops_) {
    if (const auto* f = std::get_if<FlipOp>(&op)) {
      mpz_add(ac.get_mpz_t(), w[f->sides[0]].get_mpz_t(), w[f->sides[2]].get_mpz_t());
      mpz_add(bd.get_mpz_t(), w[f->sides[1]].get_mpz_t(), w[f->sides[3]].get_mpz_t());
      Weight& e = w[f->edge];
      mpz_sub(e.get_mpz_t(), (ac > bd ? ac : bd).get_mpz_t(), e.get_mpz_t());
    } else {
      const auto& perm = std::get<PermuteOp>(op).edges;
      for (size_t i = 0; i < perm.size(); ++i) mpz_swap(scratch[perm[i]].get_mpz_t(), w[i].get_mpz_t());
      w.swap(scratch);
    }
  }
  return w;
}

Multicurve Encoding::act(const Multicurve& m) const {
  if (!same_host(m.host(), *source_)) throw TopologyError("curve host does not match encoding source");
  return Multicurve(source_, act(m.weights()));
}

Encoding Encoding::compose(const Encoding& first) const {
  if (!same_host(*first.source_, *source_)) throw TopologyError("cannot compose encodings with different sources");
  std::vector<Move> moves = first.moves_;
  moves.insert(moves.end(), moves_.begin(), moves_.end());
  std::vector<Op> ops = first.ops_;
  ops.insert(ops.end(), ops_.begin(), ops_.end());
  return Encoding(source_, std::move(moves), std::move(ops));
}

std::vector<Triangulation> Encoding::replay() const {
  std::vector<Triangulation> states;
  states.reserve(moves_.size() + 1);
  states.push_back(*source_);
  for (const auto& mv : moves_) {
    if (const auto* f = std::get_if<FlipMove>(&mv)) {
      states.push_back(states.back().flip(f->edge));
    } else {
      states.push_back(states.back().relabel(std::get<RelabelMove>(mv).iso));
    }
  }
  return states;
}

Encoding Encoding::inverse() const {
  auto states = replay();
  EncodingBuilder b(source_);
  for (size_t i = moves_.size(); i-- > 0;) {
    const Triangulation& before = states[i];
    if (const auto* f = std::get_if<FlipMove>(&moves_[i])) {
      b.flip(f->edge);
      b.relabel_onto(before, before.identity_isomorphism().edges);
    } else {
      b.relabel(std::get<RelabelMove>(moves_[i]).iso.inverse());
    }
  }
  return b.finish();
}

Encoding Encoding::power(long k) const {
  Encoding base = k < 0 ? inverse() : *this;
  Encoding out = identity(source_);
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = base.compose(out);
  return out;
}

}  // namespace pacurve
