#include "pacurve/word.hpp"

#include <cctype>

#include "pacurve/twist.hpp"

namespace pacurve {

namespace {

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ == s_.size();
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string name() {
    skip();
    size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '\'' ||
                              s_[i_] == '-' || s_[i_] == '.')) {
      ++i_;
    }
    if (start == i_) fail("expected a curve name");
    return s_.substr(start, i_ - start);
  }
  long integer() {
    skip();
    size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string digits = s_.substr(start, i_ - start);
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer exponent");
    try {
      return std::stol(digits);
    } catch (const std::out_of_range&) {
      fail("exponent out of range");
    }
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("twist word: " + what + " at position " + std::to_string(i_) + " in \"" + s_ + "\"");
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

}  // namespace

TwistWord parse_word(const std::string& text) {
  Lexer lx(text);
  TwistWord w;
  if (lx.done()) return w;
  {
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    if (trimmed == "id") return w;
  }
  do {
    if (!lx.accept('T')) lx.fail("expected 'T('");
    lx.expect('(');
    TwistLetter l;
    l.curve = lx.name();
    lx.expect(')');
    if (lx.accept('^')) l.power = lx.integer();
    w.push_back(std::move(l));
  } while (lx.accept('*'));
  if (!lx.done()) lx.fail("unexpected trailing input");
  return w;
}

TwistWord normalize(const TwistWord& w) {
  TwistWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().curve == l.curve) {
      out.back().power += l.power;
      if (out.back().power == 0) out.pop_back();
    } else if (l.power != 0) {
      out.push_back(l);
    }
  }
  return out;
}

std::string to_string(const TwistWord& w) {
  if (w.empty()) return "id";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " * ";
    s += "T(" + l.curve + ")";
    if (l.power != 1) s += "^" + std::to_string(l.power);
  }
  return s;
}

TwistWord compose(const TwistWord& a, const TwistWord& b) {
  TwistWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return normalize(out);
}

Encoding realize_word(const TwistWord& w, const HostPtr& host, const CurveLookup& lookup) {
  Encoding e = Encoding::identity(host);
  for (const auto& l : w) e = e.compose(twist(lookup(l.curve), l.power));
  return e;
}

}  // namespace pacurve
