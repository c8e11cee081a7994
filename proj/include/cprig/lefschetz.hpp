#pragma once

#include "cprig/fixed_points.hpp"
#include "cprig/global_index.hpp"

namespace cprig {

using EquivClass = TruncPolyT<LaurentPoly>;

/// A(q, lambda) of a fixed component as numerator / denominator, where the
/// denominator is the product of the normal-weight factors
/// (lambda^{w/2} - lambda^{-w/2})^{d(Y)+1} and the numerator lives in
/// H^*(Y) (x) Q[lambda, lambda^-1][[q]].
struct LocalClass {
  QSeries<EquivClass> numerator;
  CyclotomicDenominator denominator;
};

/// Local datum after pairing with mu_Y.
struct LocalTerm {
  QSeries<LaurentPoly> numerator;
  CyclotomicDenominator denominator;

  QSeries<LaurentRational> reduced() const;
  bool is_zero() const;
};

LocalClass local_class(const FixedComponent& y, const SpincData& spinc, int order);
LocalTerm local_term(const FixedComponent& y, const SpincData& spinc, int order);

/// Exact sum of the paired local terms of every component, each
/// q-coefficient in canonical form.
QSeries<LaurentRational> lefschetz_series(const FixedPointData& data, const SpincData& spinc, int order);

struct LefschetzResult {
  QSeries<LaurentRational> sum;
  QSeries<Rational> expected;
  VerificationReport report;
};

/// Restricts the global V (gamma^e (x) lambda^r summands) to the data,
/// sums the local terms and checks that every coefficient is a Laurent
/// polynomial whose value at lambda = 1 is the non-equivariant index of
/// the same twist on the CP^m model.
LefschetzResult lefschetz_sum(const FixedPointData& data, const SpincData& spinc, const RootBundle& vGlobal, int order);

}  // namespace cprig
