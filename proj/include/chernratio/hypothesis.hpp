#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "chernratio/errors.hpp"
#include "chernratio/rational.hpp"

namespace chernratio {

/// Outcome of the dimension test gating ampleness of the cotangent bundle of
/// a general complete intersection Y in a product of m varieties with big
/// cotangent bundle, each of dimension >= d_min.
struct HypothesisReport {
  std::int64_t m = 0;
  std::int64_t d_min = 0;
  std::int64_t dim_y = 0;
  Rat bound;  ///< (d(m+1) + 1) / (2(d+1))
  bool satisfied = false;
};

/// Evaluates dim Y <= (d(m+1) + 1) / (2(d+1)) with d = min(dims) and
/// m = len(dims), in exact rationals. For surfaces (dim_y = 2) this is the
/// same as m >= 3 + 3/d. Purely numeric: bigness of the factors' cotangent
/// bundles is assumed, not checked.
inline HypothesisReport check_ample_hypothesis(const std::vector<std::int64_t>& dims,
                                               std::int64_t dim_y) {
  if (dims.empty()) throw ValidationError("need at least one factor dimension");
  for (const std::int64_t d : dims)
    if (d < 1) throw ValidationError("factor dimensions must be >= 1");
  if (dim_y < 1) throw ValidationError("dim_y must be >= 1");

  HypothesisReport rep;
  rep.m = static_cast<std::int64_t>(dims.size());
  rep.d_min = *std::min_element(dims.begin(), dims.end());
  rep.dim_y = dim_y;
  rep.bound = Rat(Int(rep.d_min) * (rep.m + 1) + 1, 2 * (Int(rep.d_min) + 1));
  rep.satisfied = Rat(dim_y) <= rep.bound;
  return rep;
}

}  // namespace chernratio
