#include "pacurve/bigint.hpp"

#include <stdexcept>

namespace pacurve {

Weight parse_weight(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty weight string");
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("weight must be a non-negative decimal integer: '" + text + "'");
  }
  return Weight(text, 10);
}

std::string to_string(const Weight& w) { return w.get_str(10); }

std::string to_decimal(const Rational& q, int digits) {
  bool negative = sgn(q) < 0;
  Rational a = negative ? Rational(-q) : q;
  Weight scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Weight scaled = (a.get_num() * scale) / a.get_den();
  std::string s = scaled.get_str(10);
  if (digits > 0) {
    if (s.size() <= static_cast<size_t>(digits)) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  return negative ? "-" + s : s;
}

Weight total_weight(const Weights& w) {
  Weight t = 0;
  for (const auto& x : w) t += x;
  return t;
}

}  // namespace pacurve
