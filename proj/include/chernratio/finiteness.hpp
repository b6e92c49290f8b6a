#pragma once

#include <vector>

#include "chernratio/chern.hpp"
#include "chernratio/errors.hpp"
#include "chernratio/geometry.hpp"
#include "chernratio/rational.hpp"

namespace chernratio {

/// The finite set of degree vectors whose surface satisfies c1^2 >= 2 c2,
/// together with the bound that cuts it out.
struct EnumerationReport {
  /// (c1sq_h - 2 c2_h) / b. A vector qualifies iff sum d_i^2 <= bound;
  /// equality forces the ratio to be exactly 2.
  Rat bound;
  /// Canonical representatives: entries ascending within each vector,
  /// deduplicated up to permutation, listed in lexicographic order.
  std::vector<DegreeVector> vectors;
  /// Recomputed ratio of each vector, all >= 2.
  std::vector<Rat> ratios;
};

namespace detail {

/// All vectors d_1 <= ... <= d_c of positive integers with sum d_i^2 <= cap
/// (or == cap when exact_sum), in lexicographic order.
inline void ascending_vectors_by_sum_sq(int length, const Int& cap, bool exact_sum,
                                        std::vector<Int>& current,
                                        std::vector<std::vector<Int>>& out) {
  if (static_cast<int>(current.size()) == length) {
    if (!exact_sum || vec_sum_sq(current) == cap) out.push_back(current);
    return;
  }
  const int remaining = length - static_cast<int>(current.size());
  const Int used = vec_sum_sq(current);
  Int d = current.empty() ? Int(1) : current.back();
  // remaining entries are all >= d, so they need remaining * d^2 of headroom
  while (used + remaining * d * d <= cap) {
    current.push_back(d);
    ascending_vectors_by_sum_sq(length, cap, exact_sum, current, out);
    current.pop_back();
    ++d;
  }
}

}  // namespace detail

/// Enumerates every degree vector (up to permutation; the ratio is
/// permutation invariant) whose complete-intersection surface in the given
/// ambient has c1^2(S) >= 2 c2(S). The set is finite: the condition is
/// equivalent to sum d_i^2 <= (c1sq_h - 2 c2_h) / b, so it is empty whenever
/// c1sq_h <= 2 c2_h — in particular for every product of curves.
///
/// Each candidate's ratio is recomputed from chern_numbers rather than
/// trusted from the bound, and the first layer outside the bound
/// (sum d_i^2 = floor(bound) + 1) is verified to fall back below ratio 2;
/// a failure of either check throws InternalCheckError.
inline EnumerationReport enumerate_ge2(const AmbientInvariants& amb) {
  validate(amb);
  if (amb.n < 3) throw ValidationError("ambient dimension must be >= 3");
  const int length = amb.n - 2;

  EnumerationReport report;
  report.bound = Rat(amb.c1sq_h - 2 * amb.c2_h, amb.b);
  if (report.bound <= 0) return report;

  // sum d_i^2 is an integer, so <= bound and <= floor(bound) agree
  const Int cap = rat_floor(report.bound);
  std::vector<std::vector<Int>> found;
  std::vector<Int> scratch;
  detail::ascending_vectors_by_sum_sq(length, cap, false, scratch, found);
  for (std::vector<Int>& entries : found) {
    DegreeVector d{std::move(entries)};
    const SurfaceInvariants s = chern_numbers(amb, d);
    if (s.ratio < 2)
      throw InternalCheckError("vector inside the bound has ratio < 2");
    report.vectors.push_back(std::move(d));
    report.ratios.push_back(s.ratio);
  }

  std::vector<std::vector<Int>> boundary;
  scratch.clear();
  detail::ascending_vectors_by_sum_sq(length, cap + 1, true, scratch, boundary);
  for (std::vector<Int>& entries : boundary) {
    const DegreeVector d{std::move(entries)};
    if (chern_numbers(amb, d).ratio >= 2)
      throw InternalCheckError("vector outside the bound has ratio >= 2");
  }
  return report;
}

}  // namespace chernratio
