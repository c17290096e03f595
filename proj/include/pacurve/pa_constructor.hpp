#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pacurve/classifier.hpp"
#include "pacurve/orbit_graph.hpp"

namespace pacurve {

struct MaximalizeParams {
  int weight_cap = 12;  ///< Candidate enumeration bound W; grown up to 2W before giving up.
  long max_power = 32;  ///< Largest twist power tried per added curve.
};

/// One step of the maximalization loop: c' joins the system and f becomes f ∘ τ_{c''}^k.
struct MaximalizeStep {
  std::string name;
  Multicurve added;
  Multicurve twist_curve;
  long power = 0;
};

struct MaximalizeResult {
  CurveSystem system;
  Encoding f;
  std::vector<MaximalizeStep> steps;
};

/// Extends an independent, orbit-free system to a maximal one. Every added
/// curve c' gets a twist τ_{c''}^k with c'' disjoint from the system and meeting
/// c', and k the least power with f'(c') off the extended system. Throws
/// std::invalid_argument on dependent or orbit-carrying input and
/// std::runtime_error when the candidate budget runs out.
MaximalizeResult maximalize(const CurveSystem& sys, const Encoding& f, const MaximalizeParams& params = {});

/// f ∘ τ_{c_1}^{k_1} ∘ … ∘ τ_{c_n}^{k_n}; the curves must be pairwise disjoint.
Encoding realize_family(const Encoding& f, const std::vector<Multicurve>& curves, const std::vector<long>& exponents);

struct SearchSchedule {
  long k_max = 10;
  bool independent = false;  ///< Sweep exponent vectors per representative instead of the diagonal.
  ClassifierParams classifier;
  MaximalizeParams maximalize;
};

enum class SearchStatus { Refused, Accepted, Exhausted };

std::string to_string(SearchStatus s);

struct CandidateReport {
  std::vector<long> exponents;  ///< One per curve of the maximal system.
  bool lemma4_1_check = false;  ///< Candidate agrees with f' on every system curve.
  ClassificationReport report;
};

/// Evidence that an orbit forbids a pseudo-Anosov candidate: g^p(c) = c.
struct OrbitWitness {
  std::vector<std::string> orbit;
  int period = 0;
  std::vector<long> exponents;  ///< Family used for the check (all ones).
  bool holds = false;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<OrbitWitness> witness;
  std::optional<MaximalizeResult> maximal;
  std::vector<ChainComponent> chains;
  std::vector<CandidateReport> candidates;  ///< In sweep order.
  std::optional<size_t> accepted;           ///< Index into candidates.
  double seconds = 0;
};

SearchResult theorem1_search(const CurveSystem& sys, const Encoding& f, const SearchSchedule& sched = {});

}  // namespace pacurve
