#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "chernratio/errors.hpp"

namespace chernratio {

/// Arbitrary-precision integer. All intersection numbers are exact integers.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms with positive
/// denominator. Core computations never touch floating point.
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(std::int64_t n) {
  if (n < 0) throw ValidationError("factorial: negative argument");
  Int r = 1;
  for (std::int64_t k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Int pow10(std::int64_t k) {
  if (k < 0) throw ValidationError("pow10: negative exponent");
  Int r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= 10;
  return r;
}

/// Largest r with r*r <= n. Binary search on squares, no floating point.
inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw ValidationError("isqrt_floor: negative argument");
  if (n < 2) return n;
  Int lo = 1;
  Int hi = Int(1) << (boost::multiprecision::msb(n) / 2 + 1);
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    if (mid * mid <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

inline bool is_perfect_square(const Int& n, Int& root) {
  if (n < 0) return false;
  root = isqrt_floor(n);
  return root * root == n;
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// Largest integer <= x.
inline Int rat_floor(const Rat& x) {
  Int q = numerator(x) / denominator(x);
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

inline Int vec_sum(const std::vector<Int>& v) {
  Int s = 0;
  for (const Int& x : v) s += x;
  return s;
}

inline Int vec_sum_sq(const std::vector<Int>& v) {
  Int s = 0;
  for (const Int& x : v) s += x * x;
  return s;
}

/// Sum of v_i * v_j over all index pairs i <= j, by direct expansion.
inline Int vec_pair_sum(const std::vector<Int>& v) {
  Int s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j) s += v[i] * v[j];
  return s;
}

inline Int vec_prod(const std::vector<Int>& v) {
  Int p = 1;
  for (const Int& x : v) p *= x;
  return p;
}

}  // namespace chernratio
