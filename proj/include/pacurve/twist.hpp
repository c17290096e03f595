#pragma once

#include <vector>

#include "pacurve/encoding.hpp"

namespace pacurve {

/// Right-handed Dehn twist along an essential connected curve, raised to `power`.
///
/// The encoding flips the curve down to a two-triangle annulus, applies a
/// one-flip block per unit of power and flips back. Curves cutting off a
/// genus-one side free of vertices and punctures use (τ_a τ_b)^6 for a pair a, b
/// meeting once on that side.
Encoding twist(const Multicurve& curve, long power);

/// Whether the curves meet essentially: τ_b moves a.
bool intersects(const Multicurve& a, const Multicurve& b);

/// Curves used to compare mapping classes on a host: every essential connected
/// curve up to the smallest total weight (at least 4) giving twice as many
/// curves as edges.
std::vector<Multicurve> probe_curves(const HostPtr& host);

/// Equality of actions on the given probes (or on probe_curves when empty).
bool equal_on(const Encoding& e1, const Encoding& e2, const std::vector<Multicurve>& probes = {});

/// Flip sequence taking a curve to locally minimal total weight.
struct Shortening {
  std::vector<int> flips;
  HostPtr host;  ///< Triangulation reached after the flips.
  Weights weights;
};

/// Greedy flips that lower the total weight most (lowest edge id on ties),
/// with a bounded lookahead of up to `lookahead` flips once greedy stalls.
Shortening shorten(const Multicurve& curve, int lookahead = 3);

}  // namespace pacurve
