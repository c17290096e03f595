#include "pacurve/workspace.hpp"

#include <fstream>
#include <set>

#include "pacurve/surface.hpp"
#include "pacurve/twist.hpp"

namespace pacurve {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw WorkspaceError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

template <typename T>
T number(const Json& v, const std::string& key) {
  if (!v.is_number()) throw WorkspaceError("params." + key + " must be a number");
  return v.get<T>();
}

void apply_params(const Json& p, RunParams& out) {
  if (!p.is_object()) throw WorkspaceError("params must be an object");
  auto& s = out.schedule;
  for (const auto& [key, v] : p.items()) {
    if (key == "k_max") s.k_max = number<long>(v, key);
    else if (key == "independent") {
      if (!v.is_boolean()) throw WorkspaceError("params.independent must be a boolean");
      s.independent = v.get<bool>();
    } else if (key == "seed") out.seed = number<unsigned long>(v, key);
    else if (key == "order_bound") s.classifier.order_bound = number<int>(v, key);
    else if (key == "search_depth") s.classifier.search_depth = number<int>(v, key);
    else if (key == "weight_cap") s.classifier.weight_cap = s.maximalize.weight_cap = number<int>(v, key);
    else if (key == "tolerance") s.classifier.tolerance = number<double>(v, key);
    else if (key == "min_dilatation") s.classifier.min_dilatation = number<double>(v, key);
    else if (key == "iterations") s.classifier.iterations = number<int>(v, key);
    else if (key == "max_iterations") s.classifier.max_iterations = number<int>(v, key);
    else if (key == "seeds") s.classifier.seeds = number<int>(v, key);
    else if (key == "maximalize_weight_cap") s.maximalize.weight_cap = number<int>(v, key);
    else if (key == "max_power") s.maximalize.max_power = number<long>(v, key);
    else throw WorkspaceError("unknown parameter \"" + key + "\"");
  }
}

}  // namespace

Workspace Workspace::from_json(const Json& doc) {
  if (!doc.is_object()) throw WorkspaceError("workspace must be a JSON object");
  Workspace ws;
  const Json& surf = require(doc, "surface", "workspace");
  if (!surf.contains("genus") || !surf.contains("punctures") || !surf.at("genus").is_number_integer() ||
      !surf.at("punctures").is_number_integer()) {
    throw WorkspaceError("surface: needs integer \"genus\" and \"punctures\"");
  }
  try {
    ws.host_ = std::make_shared<const Triangulation>(
        build_surface(surf.at("genus").get<int>(), surf.at("punctures").get<int>()));
  } catch (const std::invalid_argument& e) {
    throw WorkspaceError(std::string("surface: ") + e.what());
  }
  if (surf.contains("triangulation") && !(triangulation_from_json(surf.at("triangulation")) == *ws.host_))
    throw WorkspaceError("surface: triangulation differs from the standard model");

  if (doc.contains("maps")) {
    const Json& maps = doc.at("maps");
    if (!maps.is_object()) throw WorkspaceError("maps must be an object");
    for (const auto& [name, v] : maps.items()) {
      MapEntry entry;
      try {
        if (v.is_string()) entry.word = normalize(parse_word(v.get<std::string>()));
        else if (v.is_object() && v.contains("word")) entry.word = normalize(parse_word(v.at("word").get<std::string>()));
        else entry.encoding = encoding_from_json(v, ws.host_);
      } catch (const std::exception& e) {
        throw WorkspaceError("map " + name + ": " + e.what());
      }
      ws.map_order_.push_back(name);
      ws.maps_.emplace(name, std::move(entry));
    }
  }

  if (doc.contains("curves")) {
    const Json& curves = doc.at("curves");
    if (!curves.is_object()) throw WorkspaceError("curves must be an object");
    for (const auto& [name, v] : curves.items()) {
      try {
        if (v.is_object() && v.contains("apply")) {
          const std::string& src = require(v, "to", "curve " + name).get_ref<const std::string&>();
          Multicurve base = ws.curve(src);
          ws.curves_.emplace(name, ws.resolve_map(v.at("apply").get<std::string>()).act(base));
        } else {
          Multicurve m = multicurve_from_json(v, ws.host_);
          validate(m);
          ws.curves_.emplace(name, std::move(m));
        }
      } catch (const std::exception& e) {
        throw WorkspaceError("curve " + name + ": " + e.what());
      }
      ws.curve_order_.push_back(name);
    }
  }

  for (const auto& name : ws.map_order_) {
    const auto& entry = ws.maps_.at(name);
    if (entry.word) ws.check_word(*entry.word, "map " + name);
  }

  if (doc.contains("system")) {
    std::set<std::string> seen;
    for (const auto& n : doc.at("system")) {
      if (!n.is_string()) throw WorkspaceError("system must list curve names");
      auto name = n.get<std::string>();
      ws.curve(name);
      if (!seen.insert(name).second) throw WorkspaceError("system lists " + name + " twice");
      ws.system_.push_back(name);
    }
  }
  if (doc.contains("map")) {
    if (!doc.at("map").is_string()) throw WorkspaceError("map must be a map name or a twist word");
    auto ref = doc.at("map").get<std::string>();
    ws.resolve_map(ref);
    ws.map_ = ref;
  }
  if (doc.contains("params")) apply_params(doc.at("params"), ws.params_);
  return ws;
}

Workspace Workspace::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw WorkspaceError("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw WorkspaceError(path + ": " + e.what());
  }
  return from_json(doc);
}

const Multicurve& Workspace::curve(const std::string& name) const {
  auto it = curves_.find(name);
  if (it == curves_.end()) throw WorkspaceError("unknown curve \"" + name + "\"");
  return it->second;
}

void Workspace::check_word(const TwistWord& w, const std::string& where) const {
  for (const auto& l : w) {
    if (!curves_.count(l.curve)) throw WorkspaceError(where + ": unknown curve \"" + l.curve + "\"");
  }
}

Encoding Workspace::realize(const TwistWord& w) const {
  return realize_word(w, host_, [this](const std::string& n) { return curve(n); });
}

std::optional<TwistWord> Workspace::word_of(const std::string& ref) const {
  if (auto it = maps_.find(ref); it != maps_.end()) return it->second.word;
  try {
    return normalize(parse_word(ref));
  } catch (const ParseError& e) {
    throw WorkspaceError("unknown map \"" + ref + "\" (" + e.what() + ")");
  }
}

Encoding Workspace::resolve_map(const std::string& ref) const {
  if (auto it = maps_.find(ref); it != maps_.end() && it->second.encoding) return *it->second.encoding;
  auto w = word_of(ref);
  check_word(*w, "map " + ref);
  return realize(*w);
}

CurveSystem Workspace::system() const {
  std::vector<Multicurve> cs;
  for (const auto& n : system_) cs.push_back(curve(n));
  return CurveSystem(host_, system_, std::move(cs));
}

const std::string& Workspace::map() const {
  if (!map_) throw WorkspaceError("workspace names no map");
  return *map_;
}

Json workspace_json(const CurveSystem& sys, const Encoding& f, const std::string& map_name) {
  Json curves = Json::object();
  for (size_t i = 0; i < sys.size(); ++i) curves[sys.names[i]] = {{"weights", weights_to_json(sys.curves[i].weights())}};
  return Json{{"surface", surface_ref(*sys.host)},
              {"curves", curves},
              {"maps", {{map_name, to_json(f)}}},
              {"system", sys.names},
              {"map", map_name}};
}

}  // namespace pacurve
