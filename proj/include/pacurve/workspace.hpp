#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pacurve/json_io.hpp"
#include "pacurve/word.hpp"

namespace pacurve {

/// Malformed documents and unresolved names.
class WorkspaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunParams {
  SearchSchedule schedule;
  unsigned long seed = 0;
};

/// One surface with named curves, named maps, a curve system and run parameters.
//
// Curves are {"weights": [...]} or {"apply": <map ref>, "to": <curve name>}, and
// may only refer to curves listed before them. Maps are twist-word strings or
// {"moves": [...]} encodings; a map reference is a map name or an inline word.
class Workspace {
 public:
  static Workspace from_json(const Json& doc);
  static Workspace load(const std::string& path);

  const HostPtr& host() const { return host_; }
  const std::vector<std::string>& curve_names() const { return curve_order_; }
  const std::vector<std::string>& map_names() const { return map_order_; }
  const Multicurve& curve(const std::string& name) const;
  bool has_map(const std::string& name) const { return maps_.count(name) > 0; }

  Encoding resolve_map(const std::string& ref) const;
  /// The twist word behind a reference, when it is one.
  std::optional<TwistWord> word_of(const std::string& ref) const;

  const std::vector<std::string>& system_names() const { return system_; }
  CurveSystem system() const;
  /// Name of the workspace's map f; throws if none was given.
  const std::string& map() const;
  const RunParams& params() const { return params_; }
  RunParams& params() { return params_; }

 private:
  struct MapEntry {
    std::optional<TwistWord> word;
    std::optional<Encoding> encoding;
  };
  Encoding realize(const TwistWord& w) const;
  void check_word(const TwistWord& w, const std::string& where) const;

  HostPtr host_;
  std::vector<std::string> curve_order_;
  std::map<std::string, Multicurve> curves_;
  std::vector<std::string> map_order_;
  std::map<std::string, MapEntry> maps_;
  std::vector<std::string> system_;
  std::optional<std::string> map_;
  RunParams params_;
};

/// A document loadable by Workspace::from_json holding exactly these curves and map.
Json workspace_json(const CurveSystem& sys, const Encoding& f, const std::string& map_name = "f");

}  // namespace pacurve
