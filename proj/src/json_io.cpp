#include "pacurve/json_io.hpp"

#include <cstdio>
#include <map>
#include <set>

#include "pacurve/surface.hpp"

namespace pacurve {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("field \"") + key + "\" has the wrong type");
  }
}

std::string scientific(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

Json curve_list(const std::vector<Multicurve>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(weights_to_json(c.weights()));
  return out;
}

Json names_of(const std::vector<std::string>& names, const std::vector<int>& idx) {
  Json out = Json::array();
  for (int i : idx) out.push_back(names[static_cast<size_t>(i)]);
  return out;
}

Json lambda_json(const std::optional<Rational>& q) { return q ? rational_to_json(*q) : Json(nullptr); }

}  // namespace

Json weights_to_json(const Weights& w) {
  Json out = Json::array();
  for (const auto& x : w) out.push_back(to_string(x));
  return out;
}

Weights weights_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("weights must be an array");
  Weights w;
  for (const auto& x : j) {
    if (x.is_string()) {
      w.push_back(parse_weight(x.get<std::string>()));
    } else if (x.is_number_unsigned()) {
      w.emplace_back(x.get<unsigned long>());
    } else {
      throw FormatError("weights must be decimal strings or non-negative integers");
    }
  }
  return w;
}

Json rational_to_json(const Rational& q, int digits) {
  Rational c = q;
  c.canonicalize();
  return Json{{"exact", c.get_str()}, {"decimal", to_decimal(c, digits)}};
}

Json surface_ref(const Triangulation& t) { return Json{{"genus", t.genus()}, {"punctures", t.punctures()}}; }

// Slots are referenced by id 3t+i; "labels" carries the edge label of every
// slot, grouped per triangle, and the triangle ids.
Json to_json(const Triangulation& t) {
  Json tris = Json::array(), edges = Json::array(), ids = Json::array(), gluing = Json::array();
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    tris.push_back({3 * tri, 3 * tri + 1, 3 * tri + 2});
    edges.push_back({t.edge(3 * tri), t.edge(3 * tri + 1), t.edge(3 * tri + 2)});
    ids.push_back(tri);
  }
  for (int s = 0; s < t.num_slots(); ++s) {
    if (t.mate(s) > s) gluing.push_back({s, t.mate(s)});
  }
  return Json{{"ideal", t.ideal()},
              {"triangles", tris},
              {"gluing", gluing},
              {"labels", {{"edges", edges}, {"triangles", ids}}}};
}

Triangulation triangulation_from_json(const Json& j) {
  auto tris = field<std::vector<std::vector<int>>>(j, "triangles");
  auto gluing = field<std::vector<std::vector<int>>>(j, "gluing");
  auto labels = field<Json>(j, "labels");
  auto edges = field<std::vector<std::vector<int>>>(labels, "edges");
  bool ideal = field<bool>(j, "ideal");
  if (edges.size() != tris.size()) throw FormatError("labels.edges must have one triple per triangle");

  std::map<int, int> index;
  std::vector<int> slot_edges;
  for (size_t t = 0; t < tris.size(); ++t) {
    if (tris[t].size() != 3 || edges[t].size() != 3) throw FormatError("triangles must have three slots");
    for (int i = 0; i < 3; ++i) {
      if (!index.emplace(tris[t][i], static_cast<int>(3 * t) + i).second) throw FormatError("slot id repeated");
      slot_edges.push_back(edges[t][i]);
    }
  }
  std::vector<int> mates(slot_edges.size(), kUnglued);
  for (const auto& p : gluing) {
    if (p.size() != 2 || !index.count(p[0]) || !index.count(p[1]) || p[0] == p[1])
      throw FormatError("gluing entries must pair two known slots");
    int a = index[p[0]], b = index[p[1]];
    if (mates[a] != kUnglued || mates[b] != kUnglued) throw FormatError("slot glued twice");
    mates[a] = b;
    mates[b] = a;
  }
  if (labels.contains("triangles")) {
    auto ids = field<std::vector<int>>(labels, "triangles");
    std::set<int> distinct(ids.begin(), ids.end());
    if (ids.size() != tris.size() || distinct.size() != ids.size()) throw FormatError("triangle ids must be distinct");
  }
  return Triangulation(std::move(slot_edges), std::move(mates), ideal);
}

Json to_json(const Multicurve& m, bool with_components) {
  Json out{{"surface", surface_ref(m.host())}, {"weights", weights_to_json(m.weights())}};
  if (with_components) {
    Json comps = Json::array();
    int n = 0;
    for (const auto& c : validate(m)) {
      comps.push_back({{"label", "component" + std::to_string(++n)},
                       {"weights", weights_to_json(c.curve.weights())},
                       {"multiplicity", c.multiplicity}});
    }
    out["components"] = comps;
  }
  return out;
}

Multicurve multicurve_from_json(const Json& j, const HostPtr& host) {
  if (j.is_array()) return Multicurve(host, weights_from_json(j));
  if (j.contains("surface") && j.at("surface") != surface_ref(*host))
    throw FormatError("curve lives on a different surface");
  return Multicurve(host, weights_from_json(field<Json>(j, "weights")));
}

Json move_to_json(const Move& m) {
  if (const auto* f = std::get_if<FlipMove>(&m)) return Json{{"flip", f->edge}};
  const auto& iso = std::get<RelabelMove>(m).iso;
  return Json{{"relabel", {{"slots", iso.slots}, {"edges", iso.edges}}}};
}

Move move_from_json(const Json& j) {
  if (j.is_object() && j.contains("flip")) return FlipMove{field<int>(j, "flip")};
  if (j.is_object() && j.contains("relabel")) {
    const auto& r = j.at("relabel");
    return RelabelMove{Isomorphism{field<std::vector<int>>(r, "slots"), field<std::vector<int>>(r, "edges")}};
  }
  throw FormatError("a move is {\"flip\": edge} or {\"relabel\": {\"slots\", \"edges\"}}");
}

Json to_json(const Encoding& e) {
  Json moves = Json::array();
  for (const auto& m : e.moves()) moves.push_back(move_to_json(m));
  return Json{{"surface", surface_ref(e.source())}, {"flips", e.flip_count()}, {"moves", moves}};
}

Encoding encoding_from_json(const Json& j, const HostPtr& host) {
  if (j.contains("surface") && j.at("surface") != surface_ref(*host))
    throw FormatError("map lives on a different surface");
  std::vector<Move> moves;
  for (const auto& m : field<Json>(j, "moves")) moves.push_back(move_from_json(m));
  return Encoding::from_moves(host, std::move(moves));
}

Json to_json(const CurveSystem& sys) {
  Json curves = Json::object();
  for (size_t i = 0; i < sys.size(); ++i) {
    Json c{{"weights", weights_to_json(sys.curves[i].weights())}};
    if (sys.has_images()) c["image"] = weights_to_json(sys.images[i].weights());
    curves[sys.names[i]] = c;
  }
  return Json{{"surface", surface_ref(*sys.host)}, {"names", sys.names}, {"curves", curves}};
}

Json to_json(const OrbitGraph& g) {
  Json adjacency = Json::object(), edges = Json::array();
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    Json targets = Json::array();
    if (g.next[i] >= 0) targets.push_back(g.vertices[static_cast<size_t>(g.next[i])]);
    adjacency[g.vertices[i]] = targets;
  }
  for (auto [a, b] : g.edges()) edges.push_back({g.vertices[static_cast<size_t>(a)], g.vertices[static_cast<size_t>(b)]});
  return Json{{"vertices", g.vertices}, {"adjacency", adjacency}, {"edges", edges}};
}

Json chains_to_json(const OrbitGraph& g, const std::vector<ChainComponent>& chains) {
  Json out = Json::array();
  for (const auto& c : chains) {
    out.push_back({{"kind", c.vertices.size() == 1 ? "vertex" : "chain"},
                   {"vertices", names_of(g.vertices, c.vertices)},
                   {"representative", g.vertices[static_cast<size_t>(c.representative())]}});
  }
  return out;
}

Json to_json(const ClassifierParams& p) {
  return Json{{"order_bound", p.order_bound},       {"search_depth", p.search_depth},
              {"weight_cap", p.weight_cap},         {"tolerance", scientific(p.tolerance)},
              {"min_dilatation", p.min_dilatation}, {"iterations", p.iterations},
              {"max_iterations", p.max_iterations}, {"seeds", p.seeds}};
}

Json to_json(const ClassificationReport& r) {
  Json out{{"verdict", to_string(r.verdict)}};
  out["order"] = r.order ? Json(*r.order) : Json(nullptr);
  if (r.invariant) {
    out["invariant"] = {{"period", r.invariant->period},
                        {"disjoint", r.invariant->disjoint},
                        {"orbit", curve_list(r.invariant->orbit)}};
  } else {
    out["invariant"] = nullptr;
  }
  out["lambda"] = lambda_json(r.lambda);
  Json runs = Json::array();
  for (const auto& s : r.seed_runs) {
    runs.push_back({{"lambda", rational_to_json(s.lambda)},
                    {"residual", scientific(s.residual.get_d())},
                    {"iterations", s.iterations},
                    {"final_total", to_string(s.totals.back())},
                    {"monotone", s.monotone},
                    {"exponential", s.exponential}});
  }
  out["seed_runs"] = runs;
  out["order_bound_used"] = r.order_bound_used;
  out["parameters"] = to_json(r.params);
  out["diagnostics"] = r.diagnostics;
  return out;
}

Json to_json(const MaximalizeResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"name", s.name},
                     {"added", weights_to_json(s.added.weights())},
                     {"twist_curve", weights_to_json(s.twist_curve.weights())},
                     {"power", s.power}});
  }
  auto gamma = build_gamma(r.system);
  return Json{{"system", to_json(r.system)},
              {"steps", steps},
              {"lemma3_postconditions",
               {{"size", r.system.size()},
                {"expected_size", max_independent_curves(*r.system.host)},
                {"maximal", check_maximal(r.system)},
                {"orbit_free", !find_orbit(gamma).has_value()}}},
              {"map", to_json(r.f)}};
}

Json to_json(const SearchResult& r, bool with_timing) {
  Json out{{"status", to_string(r.status)}};
  if (r.witness) {
    out["orbit_witness"] = {{"orbit", r.witness->orbit},
                            {"period", r.witness->period},
                            {"exponents", r.witness->exponents},
                            {"holds", r.witness->holds}};
  } else {
    out["orbit_witness"] = nullptr;
  }
  if (r.maximal) {
    out["maximalize"] = to_json(*r.maximal);
    auto gamma = build_gamma(r.maximal->system);
    out["gamma"] = to_json(gamma);
    out["lemma5_chains"] = chains_to_json(gamma, r.chains);
  }
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    cands.push_back({{"k", c.exponents},
                     {"lemma4_1_check", c.lemma4_1_check},
                     {"verdict", to_string(c.report.verdict)},
                     {"lambda", lambda_json(c.report.lambda)}});
  }
  out["candidates"] = cands;
  if (r.accepted) {
    const auto& win = r.candidates[*r.accepted];
    out["accepted"] = {{"index", *r.accepted},
                       {"k", win.exponents},
                       {"lambda", lambda_json(win.report.lambda)},
                       {"report", to_json(win.report)}};
  } else {
    out["accepted"] = nullptr;
  }
  if (with_timing) out["timing"] = {{"seconds", r.seconds}};
  return out;
}

}  // namespace pacurve
