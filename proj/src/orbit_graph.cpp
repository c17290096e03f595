#include "pacurve/orbit_graph.hpp"

#include <stdexcept>

#include "pacurve/surface.hpp"

namespace pacurve {

CurveSystem::CurveSystem(HostPtr h, std::vector<std::string> n, std::vector<Multicurve> c)
    : host(std::move(h)), names(std::move(n)), curves(std::move(c)) {
  if (names.size() != curves.size()) throw std::invalid_argument("curve system: names and curves differ in length");
  for (const auto& cv : curves) {
    if (!same_host(cv.host(), *host)) throw TopologyError("curve system: curve on a different host");
  }
}

CurveSystem CurveSystem::with_map(const Encoding& f) const {
  CurveSystem out = *this;
  out.images.clear();
  for (const auto& c : curves) out.images.push_back(f.act(c));
  return out;
}

CurveSystem CurveSystem::with_curve(std::string name, Multicurve curve) const {
  CurveSystem out(host, names, curves);
  out.names.push_back(std::move(name));
  out.curves.push_back(std::move(curve));
  return out;
}

Multicurve CurveSystem::joint() const {
  Multicurve m = Multicurve::empty(host);
  for (const auto& c : curves) m = m + c;
  return m;
}

int CurveSystem::index_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

IndependenceReport check_independent(const CurveSystem& sys) {
  IndependenceReport rep;
  auto fail = [&](std::string msg) {
    rep.independent = false;
    rep.problems.push_back(std::move(msg));
  };
  const size_t n = sys.size();
  std::vector<bool> usable(n, true);
  for (size_t i = 0; i < n; ++i) {
    auto comps = validate(sys.curves[i]);
    if (comps.size() != 1 || comps[0].multiplicity != 1) {
      fail(sys.names[i] + ": not a single connected curve");
      usable[i] = false;
    } else if (!is_essential(sys.curves[i])) {
      fail(sys.names[i] + ": inessential");
      usable[i] = false;
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (!usable[i] || !usable[j]) continue;
      if (is_parallel(sys.curves[i], sys.curves[j])) {
        fail(sys.names[i] + ", " + sys.names[j] + ": parallel");
      } else if (!are_disjoint(sys.curves[i], sys.curves[j])) {
        fail(sys.names[i] + ", " + sys.names[j] + ": intersect");
      }
    }
  }
  if (!rep.independent) return rep;

  auto comps = validate(sys.joint());
  auto name_of = [&](int comp) {
    for (size_t i = 0; i < n; ++i) {
      if (sys.curves[i] == comps[static_cast<size_t>(comp)].curve) return sys.names[i];
    }
    return std::string("?");
  };
  for (const auto& piece : cut_along(sys.joint())) {
    if (piece.euler_characteristic < 0 || piece.punctures > 0) continue;
    std::string who;
    for (int b : piece.boundary_components) who += (who.empty() ? "" : ", ") + name_of(b);
    fail(who + ": cobound a disk or an annulus around the marked vertex");
  }
  if (static_cast<int>(n) > max_independent_curves(*sys.host)) {
    fail("more than 3g+h-3 curves");
  }
  return rep;
}

bool check_maximal(const CurveSystem& sys) {
  auto rep = check_independent(sys);
  if (!rep.independent) throw TopologyError("check_maximal: system is not independent: " + rep.problems.front());
  for (const auto& p : cut_along(sys.joint())) {
    if (!p.is_pants()) return false;
  }
  return true;
}

OrbitGraph::OrbitGraph(std::vector<std::string> v, const std::vector<std::pair<int, int>>& edges)
    : vertices(std::move(v)), next(vertices.size(), -1), prev(vertices.size(), -1) {
  const int n = static_cast<int>(vertices.size());
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("orbit graph: vertex index out of range");
    if (next[i] != -1 || prev[j] != -1) throw std::invalid_argument("orbit graph: degree exceeds one");
    next[i] = j;
    prev[j] = i;
  }
}

std::vector<std::pair<int, int>> OrbitGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < next.size(); ++i) {
    if (next[i] >= 0) out.emplace_back(static_cast<int>(i), next[i]);
  }
  return out;
}

OrbitGraph build_gamma(const CurveSystem& sys) {
  if (!sys.has_images()) throw std::invalid_argument("build_gamma: system has no map images");
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < sys.size(); ++i) {
    for (size_t j = 0; j < sys.size(); ++j) {
      if (sys.images[i] == sys.curves[j]) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return OrbitGraph(sys.names, edges);
}

std::optional<std::vector<int>> find_orbit(const OrbitGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  for (int start = 0; start < n; ++start) {
    // With out-degree at most one, start lies on a cycle iff walking n steps returns to it.
    int v = start;
    std::vector<int> path;
    for (int step = 0; step < n; ++step) {
      path.push_back(v);
      v = g.next[v];
      if (v < 0) break;
      if (v == start) return path;
    }
  }
  return std::nullopt;
}

std::vector<ChainComponent> chain_decomposition(const OrbitGraph& g) {
  if (find_orbit(g)) throw std::logic_error("chain_decomposition: graph contains an orbit");
  std::vector<ChainComponent> out;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.prev[v] != -1) continue;
    ChainComponent c;
    for (int u = static_cast<int>(v); u != -1; u = g.next[u]) c.vertices.push_back(u);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace pacurve
