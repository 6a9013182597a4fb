#pragma once

#include <vector>

#include "sheafdist/interval.hpp"

namespace sheafdist {

/// Hom(k_I[-i], k_J[-j]) in the bounded derived category. With
/// i = source.degree and j = target.degree this is Ext^{i-j}(k_I, k_J):
/// a source sitting one degree above its target probes Ext^1.
struct HomQuery {
  GradedInterval source;
  GradedInterval target;

  int ext_degree() const noexcept { return source.degree - target.degree; }
};

/// dim Ext^n(k_I, k_J) from closed-form tables (0 or 1). Zero unless
/// n is 0 or 1. Infinite endpoints count as open on the source side and
/// closed on the target side.
int ext_dim(const Interval& source, const Interval& target, int n, double tol = kDefaultTolerance);

int hom_dim(const HomQuery& query, double tol = kDefaultTolerance);

/// Ext dimension recomputed as cohomology of the totalised Hom double
/// complex between an open-interval left resolution of the source and a
/// closed-interval right resolution of the target. Bounded intervals only;
/// throws Error(unsupported) otherwise.
int ext_oracle(const HomQuery& query, double tol = kDefaultTolerance);

/// Whether the composite of canonical generators I -> J -> K is nonzero.
/// Requires Hom(k_I,k_J) and Hom(k_J,k_K) nonzero (throws otherwise).
bool generator_composite_nonzero(const Interval& i, const Interval& j, const Interval& k,
                                 double tol = kDefaultTolerance);

namespace detail {

/// Degree-0 Hom by the support criterion: I∩J nonempty, closed in I and
/// open in J. Total on all intervals.
bool hom0_nonzero(const Interval& source, const Interval& target, double tol);

struct ExtComplex {
  /// Tot^n for n = -1..2 stored at offset n+1.
  std::vector<int> dims;
  /// d^n : Tot^n -> Tot^{n+1} for n = -1..1, row-major (rows = target dim),
  /// entries reduced modulo kPrime.
  std::vector<std::vector<std::vector<long long>>> differentials;
};

inline constexpr long long kPrime = 2147483647;

ExtComplex build_ext_complex(const Interval& source, const Interval& target, double tol);

/// Resolution oracle without the boundedness restriction (ray resolutions).
int resolution_ext_dim(const Interval& source, const Interval& target, int n, double tol);

}  // namespace detail

}  // namespace sheafdist
