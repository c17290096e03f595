#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pacurve/encoding.hpp"

namespace pacurve {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One factor T(name)^power of a twist word.
struct TwistLetter {
  std::string curve;
  long power = 1;
  bool operator==(const TwistLetter&) const = default;
};

/// Product of twists, leftmost applied last: "T(a)^2 * T(b)^-1" is τ_a² ∘ τ_b⁻¹.
using TwistWord = std::vector<TwistLetter>;

/// Parses "T(a)^2 * T(b)^-1"; "id" or "" is the empty word.
TwistWord parse_word(const std::string& text);

/// Merges adjacent letters on the same curve and drops zero powers.
TwistWord normalize(const TwistWord& w);

std::string to_string(const TwistWord& w);

/// Concatenation realizing a ∘ b.
TwistWord compose(const TwistWord& a, const TwistWord& b);

using CurveLookup = std::function<Multicurve(const std::string&)>;

Encoding realize_word(const TwistWord& w, const HostPtr& host, const CurveLookup& lookup);

}  // namespace pacurve
