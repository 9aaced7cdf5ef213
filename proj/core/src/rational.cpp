#include "steinercut/rational.hpp"

#include <cctype>

#include "steinercut/error.hpp"

namespace steinercut {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
  if (s.empty()) return false;
  size_t i = 0;
  if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string num = text, den = "1";
  if (size_t slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_token(num, true) || !is_integer_token(den, false)) {
    fail(errc::parse, "malformed rational \"" + text + "\" (expected \"p\" or \"p/q\")");
  }
  Int d(den);
  if (d == 0) fail(errc::parse, "malformed rational \"" + text + "\" (zero denominator)");
  return Rat(Int(num), d);
}

std::string to_string(const Rat& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/";
    out += denominator(value).str();
  }
  return out;
}

std::string to_string(const Int& value) { return value.str(); }

}  // namespace steinercut
