#include "pacurve/surface.hpp"

#include <stdexcept>
#include <string>

namespace pacurve {

namespace {

using Tri = std::array<int, 3>;

// Centrally symmetric fan-free triangulation of a convex n-gon with vertices 0..n-1.
std::vector<Tri> zigzag(int n) {
  std::vector<Tri> out;
  out.push_back({0, 1, n - 1});
  int lo = 1;
  int hi = n - 1;
  bool move_hi = true;
  while (hi - lo > 1) {
    if (move_hi) {
      out.push_back({lo, hi - 1, hi});
      --hi;
    } else {
      out.push_back({lo, lo + 1, hi});
      ++lo;
    }
    move_hi = !move_hi;
  }
  return out;
}

std::string diagonal_key(const std::string& prefix, int a, int b, int n) {
  if (a > b) std::swap(a, b);
  if (b - a == 1 || (a == 0 && b == n - 1)) return "";
  return prefix + "d" + std::to_string(a) + "_" + std::to_string(b);
}

using KeyedTriangles = std::vector<std::array<std::string, 3>>;

// 4g-gon with side word a1 b1 a1^-1 b1^-1 ... ; all corners become one vertex.
KeyedTriangles handle_polygon(int genus, std::vector<std::string>& order) {
  const int n = 4 * genus;
  std::vector<std::string> side(static_cast<size_t>(n));
  for (int h = 0; h < genus; ++h) {
    side[4 * h] = "a" + std::to_string(h);
    side[4 * h + 1] = "b" + std::to_string(h);
    side[4 * h + 2] = "a" + std::to_string(h);
    side[4 * h + 3] = "b" + std::to_string(h);
    order.push_back("a" + std::to_string(h));
    order.push_back("b" + std::to_string(h));
  }
  KeyedTriangles out;
  for (const auto& tri : zigzag(n)) {
    std::array<std::string, 3> keys;
    for (int i = 0; i < 3; ++i) {
      int a = tri[i];
      int b = tri[(i + 1) % 3];
      std::string d = diagonal_key("", a, b, n);
      if (!d.empty()) {
        keys[i] = d;
      } else {
        keys[i] = side[(b - a + n) % n == 1 ? a : b];
      }
    }
    out.push_back(keys);
  }
  return out;
}

// Doubled h-gon: a sphere with h punctures.
KeyedTriangles doubled_polygon(int n, std::vector<std::string>& order) {
  for (int i = 0; i < n; ++i) order.push_back("s" + std::to_string(i));
  KeyedTriangles out;
  for (int copy = 0; copy < 2; ++copy) {
    std::string prefix = copy == 0 ? "top" : "bot";
    for (const auto& base : zigzag(n)) {
      Tri tri = copy == 0 ? base : Tri{base[0], base[2], base[1]};
      std::array<std::string, 3> keys;
      for (int i = 0; i < 3; ++i) {
        int a = tri[i];
        int b = tri[(i + 1) % 3];
        std::string d = diagonal_key(prefix, a, b, n);
        if (!d.empty()) {
          keys[i] = d;
        } else {
          int lo = (b - a + n) % n == 1 ? a : b;
          keys[i] = "s" + std::to_string(lo);
        }
      }
      out.push_back(keys);
    }
  }
  return out;
}

// Replaces triangle `index` by three triangles around a new interior vertex.
void subdivide(KeyedTriangles& tris, size_t index, int tag) {
  auto [x, y, z] = tris[index];
  std::string p = "p" + std::to_string(tag) + "_";
  // Corners P,Q,R of the triangle; spokes to the new vertex V.
  std::string vp = p + "P", vq = p + "Q", vr = p + "R";
  tris[index] = {x, vq, vp};
  tris.push_back({y, vr, vq});
  tris.push_back({z, vp, vr});
}

}  // namespace

Triangulation build_surface(int genus, int punctures) {
  if (genus < 0 || punctures < 0) throw std::invalid_argument("genus and punctures must be non-negative");
  if (2 - 2 * genus - punctures >= 0) {
    throw std::invalid_argument("surface S_" + std::to_string(genus) + "," + std::to_string(punctures) +
                                " has non-negative Euler characteristic");
  }
  std::vector<std::string> order;
  if (genus == 0) return Triangulation::from_side_keys(doubled_polygon(punctures, order), true, order);
  KeyedTriangles tris = handle_polygon(genus, order);
  if (punctures == 0) return Triangulation::from_side_keys(tris, false, order);
  for (int k = 1; k < punctures; ++k) subdivide(tris, static_cast<size_t>(k - 1) % tris.size(), k);
  return Triangulation::from_side_keys(tris, true, order);
}

int max_independent_curves(const Triangulation& t) { return 3 * t.genus() + t.punctures() - 3; }

}  // namespace pacurve
