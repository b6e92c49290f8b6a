#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "chernratio/errors.hpp"
#include "chernratio/rational.hpp"

namespace chernratio {

/// Lowest-term rational as "p/q", or plain "p" when the denominator is 1.
inline std::string fraction_string(const Rat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) {
    s += '/';
    s += denominator(x).str();
  }
  return s;
}

/// Renders x with exactly `sig` significant decimal digits, rounding
/// half-to-even. Fixed-point notation when the decimal exponent lies in
/// [-4, sig), scientific ("d.dd...e+XX") otherwise. Zero renders as
/// "0.00...0" with sig digits. Entirely integer arithmetic.
inline std::string decimal_string(const Rat& x, int sig = 12) {
  if (sig < 1) throw ValidationError("decimal_string: need at least one significant digit");
  const bool neg = x < 0;
  const Int p = neg ? Int(-numerator(x)) : numerator(x);
  const Int q = denominator(x);

  std::int64_t exp10 = 0;
  std::string digits;
  if (p == 0) {
    digits.assign(static_cast<std::size_t>(sig), '0');
  } else {
    // exp10 = floor(log10(p/q)): q*10^exp10 <= p < q*10^(exp10+1)
    const auto less_than_pow10 = [&](std::int64_t e) {  // p/q < 10^e
      return e >= 0 ? p < q * pow10(e) : p * pow10(-e) < q;
    };
    exp10 = static_cast<std::int64_t>(p.str().size()) - static_cast<std::int64_t>(q.str().size());
    while (less_than_pow10(exp10)) --exp10;
    while (!less_than_pow10(exp10 + 1)) ++exp10;

    // round(p/q * 10^(sig-1-exp10)), half to even
    const std::int64_t shift = sig - 1 - exp10;
    Int num = p;
    Int den = q;
    if (shift >= 0) {
      num *= pow10(shift);
    } else {
      den *= pow10(-shift);
    }
    Int r = num / den;
    const Int rem2 = 2 * (num % den);
    if (rem2 > den || (rem2 == den && r % 2 != 0)) ++r;
    if (r == pow10(sig)) {  // 999... rounded up a magnitude
      r = pow10(sig - 1);
      ++exp10;
    }
    digits = r.str();
  }

  std::string out;
  if (exp10 >= -4 && exp10 < sig) {
    if (exp10 >= 0) {
      out = digits.substr(0, static_cast<std::size_t>(exp10) + 1);
      if (exp10 + 1 < sig) {
        out += '.';
        out += digits.substr(static_cast<std::size_t>(exp10) + 1);
      }
    } else {
      out = "0.";
      out.append(static_cast<std::size_t>(-exp10 - 1), '0');
      out += digits;
    }
  } else {
    out = digits.substr(0, 1);
    if (sig > 1) {
      out += '.';
      out += digits.substr(1);
    }
    out += 'e';
    out += exp10 < 0 ? '-' : '+';
    std::string es = std::to_string(exp10 < 0 ? -exp10 : exp10);
    if (es.size() < 2) es.insert(0, "0");
    out += es;
  }
  return neg ? "-" + out : out;
}

/// Signed decimal integer. Rejects anything but an optional sign and digits.
inline Int parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ValidationError("integer literal has no digits: '" + std::string(text) + "'");
  Int v = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw ValidationError("bad integer literal: '" + std::string(text) + "'");
    v = v * 10 + (text[i] - '0');
  }
  return neg ? Int(-v) : v;
}

/// Accepts "p/q", a decimal integer, or a decimal literal with optional
/// exponent ("1.5", ".5", "1e-6"). Decimal literals convert to the exact
/// rational they denote; no floating point is involved.
inline Rat parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ValidationError("empty rational literal");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Int num = parse_integer(text.substr(0, slash));
    const Int den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator: '" + std::string(text) + "'");
    return Rat(num, den);
  }

  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  Int mantissa = 0;
  std::int64_t frac_digits = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) ++frac_digits;
      any_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw ValidationError("bad rational literal: '" + std::string(text) + "'");
    }
  }
  if (!any_digit) throw ValidationError("rational literal has no digits: '" + std::string(text) + "'");
  std::int64_t exp = 0;
  if (i < text.size()) {  // at 'e'/'E'
    const std::string_view etext = text.substr(i + 1);
    const Int e = parse_integer(etext);
    if (e > 18 || e < -18) throw ValidationError("exponent out of range: '" + std::string(text) + "'");
    exp = static_cast<std::int64_t>(e);
  }

  Int num = mantissa;
  Int den = 1;
  const std::int64_t net = exp - frac_digits;
  if (net >= 0) {
    num *= pow10(net);
  } else {
    den = pow10(-net);
  }
  if (neg) num = -num;
  return Rat(num, den);
}

}  // namespace chernratio
