#pragma once

#include <vector>

#include "chernratio/errors.hpp"
#include "chernratio/geometry.hpp"
#include "chernratio/rational.hpp"

namespace chernratio {

/// Degrees (d_1, ..., d_c) of the hypersurfaces cutting out the surface,
/// c = N - 2. All entries are positive.
struct DegreeVector {
  std::vector<Int> entries;

  Int total() const { return vec_sum(entries); }        ///< |d| = sum d_i
  Int sum_sq() const { return vec_sum_sq(entries); }    ///< sum d_i^2
  Int pair_sum() const { return vec_pair_sum(entries); }  ///< sum_{i<=j} d_i d_j
  Int prod() const { return vec_prod(entries); }
};

inline void validate(const DegreeVector& d) {
  if (d.entries.empty()) throw ValidationError("degree vector must be nonempty");
  for (const Int& e : d.entries)
    if (e < 1) throw ValidationError("degree entries must be >= 1");
}

/// Chern numbers of the cut surface together with their exact ratio.
struct SurfaceInvariants {
  Int c1sq;
  Int c2;
  Rat ratio;
  bool ample_hypothesis = false;
};

/// Chern numbers of a general complete-intersection surface of degree d in
/// an ambient with invariants amb:
///
///   c1^2(S) = prod(d_i) * (c1sq_h - 2a|d| + b|d|^2)
///   c2(S)   = prod(d_i) * (c2_h - a|d| + b * sum_{i<=j} d_i d_j)
///
/// Throws if the vector length is not n-2 or if c2(S) vanishes (degenerate
/// input; no such surface exists in the geometric regime).
inline SurfaceInvariants chern_numbers(const AmbientInvariants& amb, const DegreeVector& d) {
  validate(amb);
  validate(d);
  if (amb.n < 3) throw DimensionMismatchError("ambient dimension must be >= 3 to cut a surface");
  if (static_cast<int>(d.entries.size()) != amb.n - 2)
    throw DimensionMismatchError("degree vector length must equal n - 2");

  const Int total = d.total();
  const Int pairs = d.pair_sum();
  const Int prod = d.prod();
  SurfaceInvariants s;
  s.c1sq = prod * (amb.c1sq_h - 2 * amb.a * total + amb.b * total * total);
  s.c2 = prod * (amb.c2_h - amb.a * total + amb.b * pairs);
  if (s.c2 == 0) throw ValidationError("c2(S) = 0: ratio undefined for this input");
  s.ratio = Rat(s.c1sq, s.c2);
  s.ample_hypothesis = amb.ample_hypothesis;
  return s;
}

/// Chern ratio of the same surface by the closed form specific to products
/// of curves (depends only on the multiples l_i and the degrees):
///
///   2 - N(N-1) sum(d_i^2) / [ sum_{i<j} 1/(l_i l_j)
///                             + (N-1)(|d| sum_i 1/l_i + N sum_{i<=j} d_i d_j) ]
///
/// Must agree exactly with the chern_numbers path; the test suite uses the
/// two routes as each other's oracle.
inline Rat ratio_closed_form(const CurveProductConfig& config, const DegreeVector& d) {
  validate(config);
  validate(d);
  const int n = config.dimension();
  if (n < 3) throw DimensionMismatchError("need at least 3 curve factors to cut a surface");
  if (static_cast<int>(d.entries.size()) != n - 2)
    throw DimensionMismatchError("degree vector length must equal N - 2");

  Rat inv_pair = 0;    // sum_{i<j} 1/(l_i l_j)
  Rat inv_single = 0;  // sum_i 1/l_i
  for (int i = 0; i < n; ++i) {
    inv_single += Rat(1, config.curves[i].multiple);
    for (int j = i + 1; j < n; ++j)
      inv_pair += Rat(1, Int(config.curves[i].multiple) * config.curves[j].multiple);
  }
  const Int total = d.total();
  const Int sum_sq = d.sum_sq();
  const Int pairs = d.pair_sum();

  const Rat denom = inv_pair + Rat(n - 1) * (Rat(total) * inv_single + Rat(Int(n) * pairs));
  return Rat(2) - Rat(Int(n) * (n - 1) * sum_sq) / denom;
}

/// Chern ratio of the complete intersection with degree vector scale * e,
/// evaluated without the common prod(d_i) factor:
///
///   (c1sq_h - 2a*s|e| + b*s^2|e|^2) / (c2_h - a*s|e| + b*s^2 sum_{i<=j} e_i e_j)
///
/// Agrees exactly with chern_numbers(amb, scale * e).ratio.
inline Rat ratio_at_scale(const AmbientInvariants& amb, const DegreeVector& e, const Int& scale) {
  validate(amb);
  validate(e);
  if (scale < 1) throw ValidationError("scale must be >= 1");
  if (amb.n < 3 || static_cast<int>(e.entries.size()) != amb.n - 2)
    throw DimensionMismatchError("degree vector length must equal n - 2");

  const Int st = scale * e.total();
  const Int num = amb.c1sq_h - 2 * amb.a * st + amb.b * st * st;
  const Int den = amb.c2_h - amb.a * st + amb.b * scale * scale * e.pair_sum();
  if (den == 0) throw ValidationError("c2(S) = 0 at this scale: ratio undefined");
  return Rat(num, den);
}

}  // namespace chernratio
