#pragma once

#include <cstdint>
#include <vector>

#include "chernratio/errors.hpp"
#include "chernratio/rational.hpp"

namespace chernratio {

/// One factor of the ambient product: a smooth curve of genus >= 2 embedded
/// by the `multiple`-pluricanonical linear system. Genus-2 curves are always
/// hyperelliptic; hyperelliptic curves need `multiple` >= 2 for the embedding.
struct CurveSpec {
  std::int64_t genus = 2;
  std::int64_t multiple = 1;
  bool hyperelliptic = false;
};

inline void validate(const CurveSpec& c) {
  if (c.genus < 2) throw ValidationError("curve genus must be >= 2");
  if (c.multiple < 1) throw ValidationError("pluricanonical multiple must be >= 1");
  if (c.genus == 2 && !c.hyperelliptic)
    throw ValidationError("genus-2 curves are hyperelliptic; the flag must be set");
  if (c.hyperelliptic && c.multiple < 2)
    throw ValidationError("hyperelliptic curves need a pluricanonical multiple >= 2");
}

/// Builds a validated CurveSpec. The hyperelliptic flag is forced on at
/// genus 2 (where it is not a choice); for genus >= 3 it stays as given.
inline CurveSpec make_curve(std::int64_t genus, std::int64_t multiple, bool hyperelliptic = false) {
  CurveSpec c{genus, multiple, hyperelliptic || genus == 2};
  validate(c);
  return c;
}

/// Degree of the pluricanonical image of the curve: multiple * (2*genus - 2).
inline Int curve_degree(const CurveSpec& c) {
  validate(c);
  return Int(c.multiple) * (2 * Int(c.genus) - 2);
}

/// The ambient X = X_1 x ... x X_N, each factor a pluricanonically embedded
/// curve, the product embedded by Segre.
struct CurveProductConfig {
  std::vector<CurveSpec> curves;

  int dimension() const { return static_cast<int>(curves.size()); }

  /// True iff the product has enough factors (N >= 6) for a general
  /// complete-intersection surface in it to have ample cotangent bundle.
  bool ample_hypothesis() const { return curves.size() >= 6; }
};

inline void validate(const CurveProductConfig& config) {
  if (config.curves.size() < 2)
    throw ValidationError("a curve product needs at least 2 factors");
  for (const CurveSpec& c : config.curves) validate(c);
}

/// The four intersection numbers of the ambient that determine every surface
/// computation, plus the ambient dimension. For generic ambients the caller
/// supplies the values directly and asserts `ample_hypothesis` at own risk.
struct AmbientInvariants {
  int n = 0;         ///< dimension N of the ambient
  Int c1sq_h = 0;    ///< c1^2(X) . H^(N-2)
  Int c2_h = 0;      ///< c2(X) . H^(N-2)
  Int a = 0;         ///< c1(X) . H^(N-1)
  Int b = 0;         ///< H^N, always positive
  bool ample_hypothesis = false;
};

inline void validate(const AmbientInvariants& amb) {
  if (amb.n < 2) throw ValidationError("ambient dimension must be >= 2");
  if (amb.b <= 0) throw ValidationError("H^N must be positive");
}

/// Exact ambient intersection numbers of a product of pluricanonically
/// embedded curves:
///
///   b    =  N! * prod(2g_i - 2) * prod(l_i)
///   a    = -(N-1)! * prod(2g_i - 2) * sum_j prod_{k != j} l_k
///   c2_h =  (N-2)! * prod(2g_i - 2) * sum_{i<j} prod_{k != i,j} l_k
///
/// and c1sq_h = 2 * c2_h, which holds for every product of curves. For N = 2
/// the empty product over k not in {i,j} is 1.
inline AmbientInvariants curve_product_invariants(const CurveProductConfig& config) {
  validate(config);
  const std::vector<CurveSpec>& cs = config.curves;
  const int n = config.dimension();

  Int genus_prod = 1;  // prod(2g_i - 2)
  Int mult_prod = 1;   // prod(l_i)
  for (const CurveSpec& c : cs) {
    genus_prod *= 2 * Int(c.genus) - 2;
    mult_prod *= c.multiple;
  }
  Int single_sum = 0;  // sum_j prod_{k != j} l_k
  Int pair_sum = 0;    // sum_{i<j} prod_{k != i,j} l_k
  for (int j = 0; j < n; ++j) {
    Int prod = 1;
    for (int k = 0; k < n; ++k)
      if (k != j) prod *= cs[k].multiple;
    single_sum += prod;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Int prod = 1;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) prod *= cs[k].multiple;
      pair_sum += prod;
    }
  }

  AmbientInvariants amb;
  amb.n = n;
  amb.b = factorial(n) * genus_prod * mult_prod;
  amb.a = -factorial(n - 1) * genus_prod * single_sum;
  amb.c2_h = factorial(n - 2) * genus_prod * pair_sum;
  amb.c1sq_h = 2 * amb.c2_h;
  amb.ample_hypothesis = config.ample_hypothesis();
  return amb;
}

}  // namespace chernratio
