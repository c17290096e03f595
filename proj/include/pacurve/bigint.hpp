#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pacurve {

/// Arbitrary-precision edge weight.
using Weight = mpz_class;
using Weights = std::vector<Weight>;
using Rational = mpq_class;

Weight parse_weight(const std::string& text);
std::string to_string(const Weight& w);

/// Truncated decimal expansion of a non-negative rational, `digits` places.
std::string to_decimal(const Rational& q, int digits);

Weight total_weight(const Weights& w);

}  // namespace pacurve
