#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pacurve/encoding.hpp"

namespace pacurve {

/// Least p <= order_bound with e^p equal to the identity on the probes.
std::optional<int> periodic_check(const Encoding& e, int order_bound, const std::vector<Multicurve>& probes = {});

/// Default order bound: 4g+2 for closed models, 4g+4 for punctured ones.
int default_order_bound(const Triangulation& t);

struct InvariantSearchResult {
  /// Orbit of the first periodic seed, in iteration order.
  std::vector<Multicurve> orbit;
  int period = 0;
  /// The orbit components are pairwise disjoint, so their union is an invariant multicurve.
  bool disjoint = false;
};

/// Iterates each seed (curves up to weight_cap, then `extra_seeds`) up to
/// `depth` times and returns the first finite orbit found.
std::optional<InvariantSearchResult> invariant_multicurve_search(const Encoding& e, int depth, int weight_cap,
                                                                 const std::vector<Multicurve>& extra_seeds = {});

struct DilatationEstimate {
  Rational lambda;    ///< w_n / w_{n-1}
  Rational residual;  ///< max relative deviation of the three previous ratios
  int iterations = 0;
  std::vector<Weight> totals;  ///< w_0 .. w_n
  bool monotone = false;       ///< w non-decreasing
  bool exponential = false;    ///< w_n >= 2 w_{n-10}
};

DilatationEstimate dilatation_estimate(const Encoding& e, const Multicurve& seed, int iters);

/// a + b sqrt(d) with d squarefree (d = 1 folds into a).
struct QuadraticNumber {
  Rational a;
  Rational b;
  Weight d = 1;
  double to_double() const;
  std::string to_decimal(int digits) const;
  std::string to_string() const;
};

enum class OracleType { Periodic, Reducible, PseudoAnosov };

struct OracleResult {
  std::array<Weight, 4> matrix;  ///< row-major
  Weight trace;
  OracleType type = OracleType::Periodic;
  std::optional<QuadraticNumber> dilatation;
};

/// Integer matrix model of a word in two filling twists meeting i_ab times:
/// τ_a -> [[1, i],[0, 1]], τ_b -> [[1, 0],[-i, 1]], multiplied in word order.
/// Letters are 'a' or 'b'.
OracleResult two_twist_oracle(const std::vector<std::pair<char, long>>& word, long i_ab);

struct ClassifierParams {
  int order_bound = 0;  ///< 0 selects default_order_bound
  int search_depth = 8;
  int weight_cap = 12;
  double tolerance = 1e-6;
  double min_dilatation = 1.001;
  int iterations = 30;
  int max_iterations = 240;
  int seeds = 6;
};

enum class Verdict { Periodic, ReducibleEvidence, PseudoAnosovEvidence, Inconclusive };

std::string to_string(Verdict v);

struct ClassificationReport {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<int> order;
  std::optional<InvariantSearchResult> invariant;
  std::vector<DilatationEstimate> seed_runs;
  std::optional<Rational> lambda;  ///< Agreed estimate when pA evidence holds.
  ClassifierParams params;
  int order_bound_used = 0;
  std::vector<std::string> diagnostics;
};

/// Seeds for dilatation estimates: the lightest probe curves.
std::vector<Multicurve> dilatation_seeds(const HostPtr& host, int count);

/// Periodic, then invariant multicurve search, then dilatation over several seeds.
ClassificationReport classify(const Encoding& e, const ClassifierParams& params = {},
                              const std::vector<Multicurve>& extra_seeds = {});

}  // namespace pacurve
