#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rovcov/combinatorics.hpp"

namespace rovcov {

namespace detail {

inline Natural pow10(count_t e) { return ipow(Natural(10), e); }

inline std::size_t digit_count(const Natural& v) { return v.str().size(); }

// cpp_int reads a leading 0 as an octal prefix
inline Natural natural_from_digits(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return Natural(std::string(s));
}

}  // namespace detail

/// Correctly rounded decimal rendering of an exact rational with `digits`
/// significant digits (round half to even). Fixed notation for decimal
/// exponents in [-5, digits), scientific otherwise; trailing zeros dropped.
inline std::string to_decimal(const Rational& value, int digits = 15) {
  if (digits < 1) throw std::invalid_argument("digits must be at least 1");
  if (value == 0) return "0";
  using detail::pow10;

  const bool negative = value < 0;
  const Natural a = boost::multiprecision::abs(boost::multiprecision::numerator(value));
  const Natural b = boost::multiprecision::denominator(value);

  // e = floor(log10(a / b)), i.e. 10^e <= a/b < 10^(e+1)
  long e = static_cast<long>(detail::digit_count(a)) - static_cast<long>(detail::digit_count(b));
  auto at_least = [&](long ex) {  // a/b >= 10^ex
    return ex >= 0 ? a >= b * pow10(static_cast<count_t>(ex))
                   : a * pow10(static_cast<count_t>(-ex)) >= b;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;

  // q = round(a/b * 10^shift) holds exactly `digits` digits
  const long shift = digits - 1 - e;
  Natural num = a, den = b;
  if (shift >= 0) {
    num *= pow10(static_cast<count_t>(shift));
  } else {
    den *= pow10(static_cast<count_t>(-shift));
  }
  Natural q = num / den;
  const Natural twice_rem = 2 * (num % den);
  if (twice_rem > den || (twice_rem == den && (q % 2) == 1)) ++q;
  if (q == pow10(static_cast<count_t>(digits))) {
    q /= 10;
    ++e;
  }

  std::string mantissa = q.str();
  std::string out = negative ? "-" : "";
  if (e < -5 || e >= digits) {
    std::string frac = mantissa.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out += mantissa[0];
    if (!frac.empty()) out += "." + frac;
    out += e < 0 ? "e-" : "e+";
    std::string ex = std::to_string(e < 0 ? -e : e);
    if (ex.size() < 2) ex = "0" + ex;
    out += ex;
    return out;
  }
  std::string int_part, frac;
  if (e >= 0) {
    int_part = mantissa.substr(0, static_cast<std::size_t>(e) + 1);
    frac = mantissa.substr(static_cast<std::size_t>(e) + 1);
  } else {
    int_part = "0";
    frac = std::string(static_cast<std::size_t>(-e - 1), '0') + mantissa;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  out += int_part;
  if (!frac.empty()) out += "." + frac;
  return out;
}

/// Parses "p/q", "0.95", "1", "2.5e-3" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not an exact decimal or fraction: '" + std::string(text) + "'");
  };
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = text.substr(0, slash);
    auto q = text.substr(slash + 1);
    if (!is_digits(p) || !is_digits(q)) return fail();
    Natural den = detail::natural_from_digits(q);
    if (den == 0) throw std::invalid_argument("fraction denominator is zero");
    return Rational(detail::natural_from_digits(p), den);
  }

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto epos = body.find_first_of("eE"); epos != std::string_view::npos) {
    auto ex = body.substr(epos + 1);
    bool eneg = false;
    if (!ex.empty() && (ex[0] == '-' || ex[0] == '+')) {
      eneg = ex[0] == '-';
      ex.remove_prefix(1);
    }
    if (!is_digits(ex) || ex.size() > 6) return fail();
    exponent = std::stol(std::string(ex)) * (eneg ? -1 : 1);
    body = body.substr(0, epos);
  }
  std::string whole(body), frac;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    whole = std::string(body.substr(0, dot));
    frac = std::string(body.substr(dot + 1));
  }
  if (whole.empty() && frac.empty()) return fail();
  if ((!whole.empty() && !is_digits(whole)) || (!frac.empty() && !is_digits(frac))) return fail();

  const Natural digits = detail::natural_from_digits(whole + frac);
  exponent -= static_cast<long>(frac.size());
  Rational r = exponent >= 0 ? Rational(digits * detail::pow10(static_cast<count_t>(exponent)))
                             : Rational(digits, detail::pow10(static_cast<count_t>(-exponent)));
  return negative ? Rational(-r) : r;
}

inline std::string rational_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace rovcov
