#include "lipfree/rational.hpp"

#include <cctype>
#include <cmath>

#include "lipfree/error.hpp"

namespace lipfree {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_big(std::string_view digits) { return BigInt(std::string(digits)); }

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorKind::ParseError,
              "not a rational: '" + std::string(text) + "'");
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad(text);

  Rat value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt d = parse_big(den);
    if (d == 0) bad(text);
    value = Rat(parse_big(num)) / Rat(d);  // division canonicalizes
  } else {
    // decimal with optional exponent
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view tail = s.substr(e + 1);
      bool eneg = false;
      if (!tail.empty() && (tail.front() == '+' || tail.front() == '-')) {
        eneg = tail.front() == '-';
        tail.remove_prefix(1);
      }
      if (!all_digits(tail) || tail.size() > 6) bad(text);
      exp10 = std::stol(std::string(tail));
      if (eneg) exp10 = -exp10;
      s = s.substr(0, e);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
      if (ip.empty() && fp.empty()) bad(text);
      if (!ip.empty() && !all_digits(ip)) bad(text);
      if (!fp.empty() && !all_digits(fp)) bad(text);
      digits = std::string(ip) + std::string(fp);
      frac_len = static_cast<long>(fp.size());
    } else {
      if (!all_digits(s)) bad(text);
      digits = std::string(s);
    }
    if (digits.empty()) bad(text);
    value = Rat(parse_big(digits));
    long net = exp10 - frac_len;
    BigInt pow10 = boost::multiprecision::pow(BigInt(10),
                                              static_cast<unsigned>(std::abs(net)));
    if (net >= 0)
      value *= Rat(pow10);
    else
      value /= Rat(pow10);
  }
  return negative ? Rat(-value) : value;
}

std::string format_rational(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rat rational_from_double(double x) {
  if (!std::isfinite(x))
    throw Error(ErrorKind::ParseError, "non-finite float");
  return Rat(x);  // mpq_set_d is exact
}

}  // namespace lipfree
