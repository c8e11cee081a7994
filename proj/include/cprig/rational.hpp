#pragma once

#include <gmpxx.h>

#include <string>

#include "cprig/error.hpp"

namespace cprig {

/// Exact scalar. mpq_class keeps numerator and denominator coprime with a
/// positive denominator as long as every value is built through
/// make_rational or arithmetic on canonical operands.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) fail(ErrorCode::ZeroDenominator, "rational with zero denominator");
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::ZeroDenominator, "rational with zero denominator");
  Rational r{num, den};
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational invert_element(const Rational& r) {
  if (is_zero(r)) fail(ErrorCode::NonUnitConstantTerm, "zero is not invertible");
  return Rational(1) / r;
}

/// Exact power; negative exponents invert.
Rational pow(const Rational& base, long exponent);

Rational factorial(long n);
Rational binomial(long n, long k);

/// "num/den" or "num" when the denominator is 1.
std::string to_string(const Rational& r);

/// Floor of a rational as a big integer.
Integer floor(const Rational& r);

}  // namespace cprig
