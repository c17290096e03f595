#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pacurve/encoding.hpp"

namespace pacurve {

/// Named disjoint curves on one host, optionally with their images under a map f.
struct CurveSystem {
  HostPtr host;
  std::vector<std::string> names;
  std::vector<Multicurve> curves;
  std::vector<Multicurve> images;  ///< f(c_i), empty until with_map.

  CurveSystem(HostPtr host, std::vector<std::string> names, std::vector<Multicurve> curves);

  size_t size() const { return curves.size(); }
  bool has_images() const { return images.size() == curves.size(); }
  /// Copy with images[i] = f(curves[i]).
  CurveSystem with_map(const Encoding& f) const;
  /// Copy with one more curve (images dropped).
  CurveSystem with_curve(std::string name, Multicurve curve) const;
  Multicurve joint() const;
  int index_of(const std::string& name) const;
};

struct IndependenceReport {
  bool independent = true;
  std::vector<std::string> problems;  ///< One line per failure, naming the curves.
};

/// Essential, pairwise disjoint and non-parallel. Also rejects pairs that
/// cobound an annulus containing only the marked vertex of a closed model, and
/// systems exceeding 3g+h-3 curves.
IndependenceReport check_independent(const CurveSystem& sys);

/// Every complementary piece is a pair of pants. Throws if the system is not independent.
bool check_maximal(const CurveSystem& sys);

/// Directed graph with out- and in-degree at most one.
struct OrbitGraph {
  std::vector<std::string> vertices;
  std::vector<int> next;  ///< Successor or -1.
  std::vector<int> prev;  ///< Predecessor or -1.

  /// Throws std::invalid_argument on a degree violation or a bad index.
  OrbitGraph(std::vector<std::string> vertices, const std::vector<std::pair<int, int>>& edges);
  std::vector<std::pair<int, int>> edges() const;
};

/// Edge i -> j iff f(c_i) and c_j have equal coordinates.
OrbitGraph build_gamma(const CurveSystem& sys);

/// The directed cycle through the least vertex lying on any cycle, in traversal
/// order from that vertex; nullopt when the graph has no cycle.
std::optional<std::vector<int>> find_orbit(const OrbitGraph& g);

struct ChainComponent {
  std::vector<int> vertices;  ///< Source first.
  int representative() const { return vertices.front(); }
};

/// Components of an orbit-free graph ordered by source vertex. Throws
/// std::logic_error when a cycle exists.
std::vector<ChainComponent> chain_decomposition(const OrbitGraph& g);

}  // namespace pacurve
