#include "qcat/rational.hpp"

#include <cctype>

namespace qcat {

std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (!rat_is_integer(r)) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

/** Decimal always; leading zeros must not trigger the octal prefix rule. */
Int int_from_digits(std::string_view s) {
  size_t nz = s.find_first_not_of('0');
  if (nz == std::string_view::npos) return Int(0);
  return Int(std::string(s.substr(nz)));
}

std::optional<Rat> parse_decimal(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long long scale = 0;  // digits after the point
  size_t i = 0;
  bool any = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    digits += s[i];
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      digits += s[i];
      ++scale;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  long long expo = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    if (i >= s.size()) return std::nullopt;
    long long e = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
      e = e * 10 + (s[i] - '0');
      if (e > 100000) return std::nullopt;
    }
    expo = eneg ? -e : e;
  }
  if (i != s.size()) return std::nullopt;
  Int num = int_from_digits(digits);
  long long net = expo - scale;
  Rat r(num, 1);
  if (net > 0) {
    Int p10 = 1;
    for (long long k = 0; k < net; ++k) p10 *= 10;
    r *= Rat(p10, 1);
  } else if (net < 0) {
    Int p10 = 1;
    for (long long k = 0; k < -net; ++k) p10 *= 10;
    r /= Rat(p10, 1);
  }
  if (neg) r = -r;
  return r;
}

}  // namespace

std::optional<Rat> rat_from_string(std::string_view s) {
  if (s.empty()) return std::nullopt;
  size_t slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    bool neg = false;
    if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
      neg = num[0] == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Int d = int_from_digits(den);
    if (d == 0) return std::nullopt;
    Rat r(int_from_digits(num), d);
    return neg ? -r : r;
  }
  return parse_decimal(s);
}

}  // namespace qcat
