#pragma once

#include <cstdint>
#include <vector>

#include "chernratio/chern.hpp"
#include "chernratio/errors.hpp"
#include "chernratio/geometry.hpp"
#include "chernratio/rational.hpp"

namespace chernratio {

/// Positive integer vector (e_1, ..., e_M) used as a scaling direction for
/// degree vectors. T = sum of entries, U = sum of squared entries.
struct DirectionVector {
  std::vector<Int> entries;

  Int total() const { return vec_sum(entries); }
  Int sum_sq() const { return vec_sum_sq(entries); }
};

inline void validate(const DirectionVector& e) {
  if (e.entries.empty()) throw ValidationError("direction vector must be nonempty");
  for (const Int& x : e.entries)
    if (x < 1) throw ValidationError("direction entries must be >= 1");
}

/// (sum e_i)^2 / (sum e_i^2), exactly. Scale invariant; lies in (1, M] for
/// M >= 2 entries, with value M exactly when all entries are equal. Over all
/// positive integer vectors its image is dense in (1, +inf).
inline Rat squared_sum_ratio(const DirectionVector& e) {
  validate(e);
  const Int t = e.total();
  return Rat(t * t, e.sum_sq());
}

/// The limiting Chern ratio along degree vectors d * e as d grows:
/// 2T^2 / (T^2 + U). Scale invariant, and equal to 2f/(f+1) for
/// f = squared_sum_ratio(e).
inline Rat asymptotic_ratio(const DirectionVector& e) {
  validate(e);
  const Int t2 = e.total() * e.total();
  return Rat(2 * t2, t2 + e.sum_sq());
}

/// The excess eps(m) = (2m^3 - m^2 - 3m + 2) / (m^4 + m - 1): with m entries
/// every rational in [1 + eps(m), m] is attained by squared_sum_ratio.
/// Strictly positive, strictly decreasing for m >= 4, and tends to 0.
inline Rat min_excess(std::int64_t m) {
  if (m < 4) throw ValidationError("min_excess requires m >= 4");
  const Int k = m;
  return Rat(2 * k * k * k - k * k - 3 * k + 2, k * k * k * k + k - 1);
}

/// squared_sum_ratio of (1, ..., 1, s) with m-1 unit entries and a rational
/// tail: (m-1+s)^2 / (m-1+s^2). On s in [1, m^2] it decreases strictly from
/// m down to 1 + min_excess(m), which is what makes bisection complete.
inline Rat padded_ratio(std::int64_t m, const Rat& s) {
  if (m < 2) throw ValidationError("padded_ratio requires m >= 2");
  if (s <= 0) throw ValidationError("padded_ratio requires s > 0");
  const Rat base = s + Rat(m - 1);
  return base * base / (Rat(m - 1) + s * s);
}

/// Output of the approximation solvers.
struct ApproximationResult {
  std::int64_t m = 0;   ///< number of entries used
  DirectionVector e;    ///< entries with gcd 1
  Rat f_value;          ///< squared_sum_ratio(e), recomputed from e
  Rat asymptotic;       ///< 2 f / (f + 1)
  Rat error;            ///< |f - target| or |asymptotic - target|, per solver
};

namespace detail {

/// Result vectors longer than this are rejected rather than materialized.
inline constexpr std::int64_t kMaxVectorEntries = 2'000'000;

inline ApproximationResult result_from_slice(std::int64_t m, const Rat& s, const Rat& target) {
  ApproximationResult res;
  res.m = m;
  res.e.entries.assign(static_cast<std::size_t>(m), denominator(s));
  res.e.entries.back() = numerator(s);  // gcd of entries is 1: s is in lowest terms
  res.f_value = squared_sum_ratio(res.e);
  res.asymptotic = Rat(2 * res.f_value) / (res.f_value + 1);
  res.error = rat_abs(res.f_value - target);
  return res;
}

/// Smallest m >= 4 with 1 + min_excess(m) < target < m. Monotonicity of
/// min_excess makes a doubling-plus-bisection search exact.
inline std::int64_t minimal_entry_count(const Rat& target) {
  const Int above = rat_floor(target) + 1;  // strictly > target
  if (above > kMaxVectorEntries)
    throw IterationLimitError("target requires more vector entries than the cap");
  std::int64_t m = above < 4 ? 4 : above.convert_to<std::int64_t>();
  if (Rat(1) + min_excess(m) < target) return m;

  // only reachable for target <= 1 + min_excess(4), hence m == 4 here
  const Rat excess = target - 1;
  std::int64_t hi = 2 * m;
  while (min_excess(hi) >= excess) {
    hi *= 2;
    if (hi > kMaxVectorEntries)
      throw IterationLimitError("target too close to 1: vector would exceed the entry cap");
  }
  std::int64_t lo = m;  // min_excess(lo) >= excess > min_excess(hi)
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (min_excess(mid) < excess ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace detail

/// Finds a positive integer vector e with |squared_sum_ratio(e) - target|
/// <= tol for any target > 1.
///
/// Construction: integer targets m >= 4 are returned as the all-ones vector
/// of length m. Otherwise pick the minimal m >= 4 whose attained interval
/// [1 + min_excess(m), m] strictly contains the target, and search the slice
/// g(s) = padded_ratio(m, s) over s in [1, m^2]. When g(s) = target has a
/// rational solution the quadratic
///
///   (1 - t) s^2 + 2(m-1) s + (m-1)^2 - t(m-1) = 0
///
/// has discriminant (m-1) p (m q - p) / q^2 (t = p/q), a perfect square; that
/// root is taken directly and the error is zero. Otherwise bisect over exact
/// rationals, which the strict monotonicity of g makes complete. With tol = 0
/// and a target not attained at a rational slice point, the iteration cap is
/// reached and IterationLimitError is thrown.
///
/// The result is scaled to gcd 1. Error field: |squared_sum_ratio(e) - target|.
inline ApproximationResult approximate_squared_sum_ratio(const Rat& target, const Rat& tol,
                                                         int max_iterations = 10000) {
  if (target <= 1) throw InfeasibleError("squared_sum_ratio only attains values > 1");
  if (tol < 0) throw ValidationError("tolerance must be >= 0");
  if (max_iterations < 1) throw ValidationError("iteration cap must be >= 1");

  if (denominator(target) == 1 && target >= 4) {
    if (numerator(target) > detail::kMaxVectorEntries)
      throw IterationLimitError("integer target exceeds the vector entry cap");
    const std::int64_t m = numerator(target).convert_to<std::int64_t>();
    return detail::result_from_slice(m, Rat(1), target);
  }

  const std::int64_t m = detail::minimal_entry_count(target);
  const Int p = numerator(target);
  const Int q = denominator(target);

  const Int disc = (m - 1) * p * (m * q - p);  // > 0 since 1 < target < m
  Int root;
  if (is_perfect_square(disc, root)) {
    const Rat s((m - 1) * q + root, p - q);
    if (s >= 1 && s <= Rat(Int(m) * m)) {
      if (padded_ratio(m, s) != target)
        throw InternalCheckError("exact slice root does not reproduce the target");
      return detail::result_from_slice(m, s, target);
    }
  }

  Rat lo = 1;               // padded_ratio(m, lo) = m > target
  Rat hi = Rat(Int(m) * m);  // padded_ratio(m, hi) = 1 + min_excess(m) < target
  for (int iter = 0; iter < max_iterations; ++iter) {
    const Rat mid = (lo + hi) / 2;
    const Rat value = padded_ratio(m, mid);
    if (rat_abs(value - target) <= tol) return detail::result_from_slice(m, mid, target);
    if (value > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw IterationLimitError("bisection hit the iteration cap before reaching the tolerance");
}

/// Finds e whose asymptotic_ratio lies within tol of a target in the open
/// interval (1, 2), by solving for the quotient t = target / (2 - target)
/// in (1, +inf). The map f -> 2f/(f+1) has derivative at most 1/2 on
/// f >= 1, so a quotient tolerance of 2*tol suffices. Error field:
/// |asymptotic_ratio(e) - target|.
inline ApproximationResult approximate_surface_ratio(const Rat& target, const Rat& tol,
                                                     int max_iterations = 10000) {
  if (target <= 1 || target >= 2)
    throw InfeasibleError("surface ratio targets must lie strictly between 1 and 2");
  if (tol < 0) throw ValidationError("tolerance must be >= 0");

  const Rat quotient_target = target / (Rat(2) - target);
  ApproximationResult res =
      approximate_squared_sum_ratio(quotient_target, Rat(2) * tol, max_iterations);
  res.error = rat_abs(res.asymptotic - target);
  if (res.error > tol)
    throw InternalCheckError("tolerance transfer to the surface ratio failed");
  return res;
}

/// Smallest power of two d with |ratio_at_scale(amb, e, d) - asymptotic| <=
/// tol, found by doubling. The gap decays like 1/d, so the search terminates.
inline Int required_scale(const AmbientInvariants& amb, const DegreeVector& e, const Rat& tol) {
  if (tol <= 0) throw ValidationError("tolerance must be positive");
  const Rat limit = asymptotic_ratio(DirectionVector{e.entries});
  for (Int d = 1;; d *= 2) {
    if (rat_abs(ratio_at_scale(amb, e, d) - limit) <= tol) return d;
  }
}

}  // namespace chernratio
