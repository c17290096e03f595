#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <ostream>

#include "pacurve/surface.hpp"
#include "pacurve/twist.hpp"
#include "pacurve/workspace.hpp"

namespace pacurve::cli {

namespace {

struct Overrides {
  unsigned long seed = 0;
  long k_max = 0;
  double tolerance = 0;
  int order_bound = 0;
  int weight_cap = 0;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* k_max_opt = nullptr;
  CLI::Option* tolerance_opt = nullptr;
  CLI::Option* order_bound_opt = nullptr;
  CLI::Option* weight_cap_opt = nullptr;
  bool timing = false;
  bool independent = false;

  void apply(RunParams& p) const {
    auto& s = p.schedule;
    if (seed_opt->count()) p.seed = seed;
    if (k_max_opt->count()) s.k_max = k_max;
    if (tolerance_opt->count()) s.classifier.tolerance = tolerance;
    if (order_bound_opt->count()) s.classifier.order_bound = order_bound;
    if (weight_cap_opt->count()) s.classifier.weight_cap = s.maximalize.weight_cap = weight_cap;
    if (independent) s.independent = true;
  }
};

struct Context {
  Workspace ws;
  bool timing = false;
};

/// A finished report and the exit status it carries.
struct Outcome {
  Json report;
  int code = kOk;
};

using Handler = std::function<Outcome(Context&)>;

Json orbit_json(const OrbitGraph& g, const std::optional<std::vector<int>>& orbit) {
  if (!orbit) return nullptr;
  Json names = Json::array();
  for (int v : *orbit) names.push_back(g.vertices[static_cast<size_t>(v)]);
  return Json{{"vertices", names}, {"period", orbit->size()}};
}

std::vector<std::string> curves_or_all(const Workspace& ws, const std::vector<std::string>& picked) {
  return picked.empty() ? ws.curve_names() : picked;
}

std::string map_or_default(const Workspace& ws, const std::vector<std::string>& picked) {
  if (picked.size() > 1) throw WorkspaceError("give a single --map");
  return picked.empty() ? ws.map() : picked.front();
}

Json encoding_with_word(const Workspace& ws, const std::string& ref) {
  Json out{{"ref", ref}};
  auto w = ws.word_of(ref);
  out["word"] = w ? Json(to_string(*w)) : Json(nullptr);
  return out;
}

Outcome surface_info(Context& c) {
  const auto& t = *c.ws.host();
  return {Json{{"surface", surface_ref(t)},
               {"euler_characteristic", t.euler_characteristic()},
               {"triangles", t.num_triangles()},
               {"edges", t.num_edges()},
               {"vertices", t.num_vertices()},
               {"max_independent_curves", max_independent_curves(t)},
               {"default_order_bound", default_order_bound(t)},
               {"triangulation", to_json(t)}}};
}

Outcome curve_validate(Context& c, const std::vector<std::string>& picked, bool essential_only) {
  Json rows = Json::array();
  for (const auto& name : curves_or_all(c.ws, picked)) {
    const auto& m = c.ws.curve(name);
    auto comps = validate(m);
    bool connected = comps.size() == 1 && comps.front().multiplicity == 1;
    Json row{{"name", name}};
    row.update(to_json(m, !essential_only));
    row["connected"] = connected;
    row["essential"] = connected ? Json(is_essential(m)) : Json(nullptr);
    if (connected && *row["essential"].get_ptr<const bool*>()) row["isolating"] = is_isolating(m);
    rows.push_back(row);
  }
  return {Json{{"curves", rows}}};
}

Outcome curve_cut(Context& c, const std::vector<std::string>& picked) {
  const auto& names = picked.empty() ? c.ws.system_names() : picked;
  if (names.empty()) throw WorkspaceError("cut needs --curve or a workspace system");
  Multicurve sum = Multicurve::empty(c.ws.host());
  for (const auto& n : names) sum = sum + c.ws.curve(n);
  Json pieces = Json::array();
  long chi = 0;
  for (const auto& p : cut_along(sum)) {
    chi += p.euler_characteristic;
    pieces.push_back({{"euler_characteristic", p.euler_characteristic},
                      {"boundary_circles", p.boundary_circles},
                      {"punctures", p.punctures},
                      {"vertices", p.vertices},
                      {"boundary_components", p.boundary_components},
                      {"pants", p.is_pants()}});
  }
  return {Json{{"curves", names},
               {"multicurve", to_json(sum, true)},
               {"pieces", pieces},
               {"euler_sum", chi},
               {"surface_euler_characteristic", c.ws.host()->euler_characteristic()}}};
}

Outcome map_act(Context& c, const std::vector<std::string>& maps, const std::vector<std::string>& curves) {
  auto ref = map_or_default(c.ws, maps);
  auto f = c.ws.resolve_map(ref);
  Json images = Json::object();
  for (const auto& name : curves_or_all(c.ws, curves)) images[name] = to_json(f.act(c.ws.curve(name)));
  return {Json{{"map", encoding_with_word(c.ws, ref)}, {"images", images}}};
}

Outcome map_compose(Context& c, const std::vector<std::string>& maps) {
  if (maps.size() < 2) throw WorkspaceError("compose needs at least two --map references");
  // The composite acts as the first reference after the second, and so on.
  Encoding e = Encoding::identity(c.ws.host());
  std::optional<TwistWord> word = TwistWord{};
  Json parts = Json::array();
  for (const auto& ref : maps) {
    e = e.compose(c.ws.resolve_map(ref));
    auto w = c.ws.word_of(ref);
    word = (word && w) ? std::optional(compose(*word, *w)) : std::nullopt;
    parts.push_back(encoding_with_word(c.ws, ref));
  }
  return {Json{{"maps", parts},
               {"word", word ? Json(to_string(*word)) : Json(nullptr)},
               {"encoding", to_json(e)}}};
}

Outcome map_classify(Context& c, const std::vector<std::string>& maps) {
  auto ref = map_or_default(c.ws, maps);
  auto t0 = std::chrono::steady_clock::now();
  auto rep = classify(c.ws.resolve_map(ref), c.ws.params().schedule.classifier);
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  Json out{{"map", encoding_with_word(c.ws, ref)}, {"classification", to_json(rep)}};
  if (c.timing) out["timing"] = {{"seconds", dt.count()}};
  return {out};
}

CurveSystem system_with_map(const Workspace& ws) {
  auto sys = ws.system();
  if (sys.size() == 0) throw WorkspaceError("workspace has an empty system");
  return sys.with_map(ws.resolve_map(ws.map()));
}

Outcome gamma_cmd(Context& c, const std::string& what) {
  auto sys = system_with_map(c.ws);
  auto gamma = build_gamma(sys);
  auto orbit = find_orbit(gamma);
  Json out{{"map", encoding_with_word(c.ws, c.ws.map())}};
  if (what == "build") {
    out["system"] = to_json(sys);
    out["gamma"] = to_json(gamma);
    out["orbit"] = orbit_json(gamma, orbit);
    return {out};
  }
  out["orbit"] = orbit_json(gamma, orbit);
  if (orbit) return {out, kRefused};
  if (what == "chains") out["lemma5_chains"] = chains_to_json(gamma, chain_decomposition(gamma));
  return {out};
}

Outcome construct_maximalize(Context& c) {
  auto sys = c.ws.system();
  auto f = c.ws.resolve_map(c.ws.map());
  auto gamma = build_gamma(sys.with_map(f));
  if (auto orbit = find_orbit(gamma)) return {Json{{"orbit", orbit_json(gamma, orbit)}}, kRefused};
  auto res = maximalize(sys, f, c.ws.params().schedule.maximalize);
  Json out = to_json(res);
  out["workspace"] = workspace_json(res.system, res.f);
  return {out};
}

Outcome construct_search(Context& c) {
  const auto& params = c.ws.params();
  auto res = theorem1_search(c.ws.system(), c.ws.resolve_map(c.ws.map()), params.schedule);
  Json out{{"map", encoding_with_word(c.ws, c.ws.map())},
           {"schedule", {{"k_max", params.schedule.k_max}, {"independent", params.schedule.independent}}}};
  out.update(to_json(res, c.timing));
  switch (res.status) {
    case SearchStatus::Accepted:
      return {out, kOk};
    case SearchStatus::Refused:
      return {out, kRefused};
    case SearchStatus::Exhausted:
      return {out, kExhausted};
  }
  return {out, kOk};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curves, mapping classes and pseudo-Anosov constructions on standard surfaces", "pacurve"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides ov;
  ov.seed_opt = app.add_option("--seed", ov.seed, "Seed recorded in every report");
  ov.k_max_opt = app.add_option("--k-max", ov.k_max, "Largest exponent level in the search sweep");
  ov.tolerance_opt = app.add_option("--tolerance", ov.tolerance, "Dilatation agreement tolerance");
  ov.order_bound_opt = app.add_option("--order-bound", ov.order_bound, "Largest period tried by the periodic check");
  ov.weight_cap_opt = app.add_option("--weight-cap", ov.weight_cap, "Curve enumeration bound");
  app.add_flag("--timing", ov.timing, "Add wall-clock timings to reports");
  app.add_flag("--independent", ov.independent, "Sweep exponent vectors instead of the diagonal");

  std::string path;
  std::vector<std::string> curves, maps;
  Handler handler;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto&& make) {
    auto* sub = parent->add_subcommand(name, help);
    sub->add_option("workspace", path, "Workspace JSON file")->required();
    make(sub);
    return sub;
  };
  auto with_curves = [&](CLI::App* s) { s->add_option("--curve", curves, "Curve name (repeatable)"); };
  auto with_maps = [&](CLI::App* s) { s->add_option("--map", maps, "Map name or twist word (repeatable)"); };
  auto none = [](CLI::App*) {};

  auto* surface = app.add_subcommand("surface", "Standard model")->require_subcommand(1);
  leaf(surface, "info", "Triangulation and invariants", none)->final_callback([&] { handler = surface_info; });

  auto* curve = app.add_subcommand("curve", "Curves")->require_subcommand(1);
  leaf(curve, "validate", "Normality and components", with_curves)->final_callback([&] {
    handler = [&](Context& c) { return curve_validate(c, curves, false); };
  });
  leaf(curve, "essential", "Essentiality of connected curves", with_curves)->final_callback([&] {
    handler = [&](Context& c) { return curve_validate(c, curves, true); };
  });
  leaf(curve, "cut", "Complementary pieces", with_curves)->final_callback([&] {
    handler = [&](Context& c) { return curve_cut(c, curves); };
  });

  auto* map = app.add_subcommand("map", "Mapping classes")->require_subcommand(1);
  leaf(map, "act", "Images of curves", [&](CLI::App* s) {
    with_maps(s);
    with_curves(s);
  })->final_callback([&] { handler = [&](Context& c) { return map_act(c, maps, curves); }; });
  leaf(map, "compose", "Composite of maps", with_maps)->final_callback([&] {
    handler = [&](Context& c) { return map_compose(c, maps); };
  });
  leaf(map, "classify", "Periodic, reducible or pseudo-Anosov evidence", with_maps)->final_callback([&] {
    handler = [&](Context& c) { return map_classify(c, maps); };
  });

  auto* gamma = app.add_subcommand("gamma", "Orbit graph of the system under the map")->require_subcommand(1);
  for (const char* what : {"build", "orbit", "chains"}) {
    std::string w = what;
    leaf(gamma, w, "Orbit graph " + w, none)->final_callback([&, w] {
      handler = [w](Context& c) { return gamma_cmd(c, w); };
    });
  }

  auto* construct = app.add_subcommand("construct", "Pseudo-Anosov construction")->require_subcommand(1);
  leaf(construct, "maximalize", "Extend the system to a pants decomposition", none)->final_callback([&] {
    handler = construct_maximalize;
  });
  leaf(construct, "search", "Sweep twist exponents and classify candidates", none)->final_callback([&] {
    handler = construct_search;
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Context ctx{Workspace::load(path), ov.timing};
    ov.apply(ctx.ws.params());
    Outcome res = handler(ctx);
    const auto* top = app.get_subcommands().front();
    Json report{{"command", top->get_name() + " " + top->get_subcommands().front()->get_name()},
                {"surface", surface_ref(*ctx.ws.host())},
                {"seed", ctx.ws.params().seed}};
    report.update(res.report);
    out << report.dump(2) << "\n";
    return res.code;
  } catch (const std::exception& e) {
    err << Json{{"error", e.what()}}.dump() << "\n";
    return kInputError;
  }
}

}  // namespace pacurve::cli
