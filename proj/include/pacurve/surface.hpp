#pragma once

#include "pacurve/triangulation.hpp"

namespace pacurve {

/// Standard model for the orientable surface of genus `genus` with `punctures`
/// punctures. Closed surfaces get a one-vertex triangulation of the 4g-gon;
/// punctured ones an ideal triangulation. Throws std::invalid_argument when the
/// Euler characteristic 2 - 2g - h is not negative.
Triangulation build_surface(int genus, int punctures);

/// Upper bound 3g + h - 3 on the size of an independent curve set.
int max_independent_curves(const Triangulation& t);

}  // namespace pacurve
