#pragma once

#include <json.hpp>

#include "pacurve/classifier.hpp"
#include "pacurve/pa_constructor.hpp"

namespace pacurve {

/// Key order follows insertion, so emitted documents are stable byte for byte.
using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json weights_to_json(const Weights& w);
Weights weights_from_json(const Json& j);

Json rational_to_json(const Rational& q, int digits = 10);

/// {"genus", "punctures"} of a standard model.
Json surface_ref(const Triangulation& t);

Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

/// {"surface", "weights", "components"}; components are listed when requested.
Json to_json(const Multicurve& m, bool with_components = false);
/// Accepts the object form or a bare weight array. A "surface" field, if
/// present, must match the host.
Multicurve multicurve_from_json(const Json& j, const HostPtr& host);

Json move_to_json(const Move& m);
Move move_from_json(const Json& j);
Json to_json(const Encoding& e);
Encoding encoding_from_json(const Json& j, const HostPtr& host);

Json to_json(const CurveSystem& sys);
Json to_json(const OrbitGraph& g);
Json chains_to_json(const OrbitGraph& g, const std::vector<ChainComponent>& chains);

Json to_json(const ClassifierParams& p);
Json to_json(const ClassificationReport& r);
Json to_json(const MaximalizeResult& r);
Json to_json(const SearchResult& r, bool with_timing = false);

}  // namespace pacurve
