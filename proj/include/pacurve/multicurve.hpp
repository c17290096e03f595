#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "pacurve/bigint.hpp"
#include "pacurve/triangulation.hpp"

namespace pacurve {

using HostPtr = std::shared_ptr<const Triangulation>;

class NormalCurveError : public TopologyError {
 public:
  using TopologyError::TopologyError;
};

/// A multicurve in normal position, recorded by its intersection number with
/// every edge of the host triangulation.
class Multicurve {
 public:
  Multicurve(HostPtr host, Weights weights);
  static Multicurve empty(HostPtr host);

  const Triangulation& host() const { return *host_; }
  const HostPtr& host_ptr() const { return host_; }
  const Weights& weights() const { return weights_; }
  const Weight& operator[](int edge) const { return weights_[edge]; }
  Weight total() const { return total_weight(weights_); }
  bool is_empty() const;

  Multicurve operator+(const Multicurve& other) const;
  /// Same host and identical coordinates.
  bool operator==(const Multicurve& other) const;
  bool operator<(const Multicurve& other) const;

 private:
  HostPtr host_;
  Weights weights_;
};

bool same_host(const Triangulation& a, const Triangulation& b);

struct CurveComponent {
  Multicurve curve;
  int multiplicity = 1;
};

/// Largest total weight that is traced strand by strand.
constexpr long kMaxTracedWeight = 1'000'000;

/// Triangle inequalities and parity in every triangle, zero on boundary edges.
void check_normal(const Triangulation& host, const Weights& w);

/// Checks normality and splits into connected components (grouped by isotopy
/// class, with multiplicity), ordered by first strand along the edge order.
std::vector<CurveComponent> validate(const Multicurve& m);

/// Coordinates after flipping `edge`: e' = max(a + c, b + d) - e.
Weights flip_weights(const Triangulation& host, const Weights& w, int edge);
/// Transports the multicurve to the flipped triangulation.
Multicurve transform_under_flip(const Multicurve& m, int edge);

/// Normal coordinates of the curve linking each vertex (or puncture).
std::vector<Weights> vertex_links(const Triangulation& host);

/// True unless the curve is a vertex or puncture link. Throws when `curve` is
/// not a single connected component.
bool is_essential(const Multicurve& curve);
/// Parallel curves have identical normal coordinates on a fixed triangulation.
bool is_parallel(const Multicurve& c1, const Multicurve& c2);
/// Whether two connected curves can be realized disjointly (their sum splits as the pair).
bool are_disjoint(const Multicurve& c1, const Multicurve& c2);

/// One complementary region of a multicurve.
struct CutPiece {
  int euler_characteristic = 0;
  int boundary_circles = 0;
  int punctures = 0;
  int vertices = 0;  ///< Material vertices of a closed model.
  /// For each boundary circle, the index of the component (as ordered by validate).
  std::vector<int> boundary_components;

  bool is_pants() const { return euler_characteristic == -1 && boundary_circles + punctures == 3; }
};

std::vector<CutPiece> cut_along(const Multicurve& m);

/// An essential separating curve with a side containing no vertex or puncture.
bool is_isolating(const Multicurve& curve);

/// Visits every normal coordinate vector of total weight 1..max_total, by
/// total weight then lexicographically. The visitor returns false to stop.
void for_each_normal_vector(const Triangulation& host, int max_total, const std::function<bool(const Weights&)>& visit);

/// Essential connected curves of total weight at most `max_total`, in enumeration order.
std::vector<Multicurve> enumerate_curves(const HostPtr& host, int max_total);

}  // namespace pacurve
