#include "knotsig/rational.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "knotsig/error.hpp"

namespace knotsig {

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw InputError("malformed rational '" + s + "'");
  Integer n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  return make_rational(n, d);
}

std::string to_decimal(const Rational& v, int significant_digits) {
  // mpf with generous precision; the result is an annotation only.
  mpf_class f(v, 256);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, static_cast<std::size_t>(significant_digits));
  bool negative = false;
  if (!digits.empty() && digits[0] == '-') {
    negative = true;
    digits.erase(0, 1);
  }
  if (digits.empty()) return "0";
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
  } else if (static_cast<std::size_t>(exp) >= digits.size()) {
    out = digits + std::string(static_cast<std::size_t>(exp) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(exp)) + "." +
          digits.substr(static_cast<std::size_t>(exp));
  }
  return negative ? "-" + out : out;
}

double to_double(const Rational& v) { return v.get_d(); }

}  // namespace knotsig
