#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cprig/rational.hpp"

namespace cprig {

/// Finite Laurent polynomial in the circle variable lambda with rational
/// coefficients. Stored densely from the lowest exponent; the first and last
/// stored coefficients are nonzero, and the zero polynomial stores nothing.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants embed implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT

  static LaurentPoly monomial(const Rational& c, long exponent);
  static LaurentPoly from_terms(const std::map<long, Rational>& terms);
  /// Coefficients of lambda^low, lambda^{low+1}, ...
  static LaurentPoly from_dense(long low, std::vector<Rational> coeffs);

  bool is_zero() const { return c_.empty(); }
  /// Lowest / highest exponent; zero polynomial reports 0 for both.
  long low() const { return low_; }
  long high() const { return c_.empty() ? 0 : low_ + static_cast<long>(c_.size()) - 1; }
  Rational coeff(long exponent) const;
  const std::vector<Rational>& dense() const { return c_; }
  std::map<long, Rational> terms() const;
  std::size_t term_count() const;

  bool is_monomial() const;
  const Rational& leading() const { return c_.back(); }

  LaurentPoly shifted(long k) const;
  Rational eval(const Rational& x) const;
  std::complex<double> eval(std::complex<double> x) const;
  /// lambda -> lambda^k
  LaurentPoly substitute_power(long k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }

 private:
  void trim();

  long low_ = 0;
  std::vector<Rational> c_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
/// Only monomials are units of the Laurent polynomial ring.
LaurentPoly invert_element(const LaurentPoly& p);
LaurentPoly pow(const LaurentPoly& p, long exponent);
std::string to_string(const LaurentPoly& p);

/// Polynomial quotient and remainder treating a and b as ordinary
/// polynomials in lambda after factoring out lambda^{low}. The quotient is
/// returned with its lambda power restored, so a = q*b + r exactly.
struct PolyDivision {
  LaurentPoly quotient;
  LaurentPoly remainder;
};
PolyDivision divide(const LaurentPoly& a, const LaurentPoly& b);
/// a/b when b divides a in the Laurent ring.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd in Q[lambda, lambda^{-1}] normalised to lowest exponent 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Cyclotomic polynomial Phi_d(lambda).
const LaurentPoly& cyclotomic(int d);

/// Exact rational function num/den in lambda, always in canonical form:
/// den has lowest exponent 0 and leading coefficient 1, and num and den are
/// coprime. Structural equality is therefore equality of functions.
class LaurentRational {
 public:
  LaurentRational() : den_(Rational(1)) {}
  LaurentRational(const LaurentPoly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  LaurentRational(const Rational& c) : num_(c), den_(Rational(1)) {}     // NOLINT
  LaurentRational(long c) : LaurentRational(Rational(c)) {}              // NOLINT
  LaurentRational(int c) : LaurentRational(Rational(c)) {}               // NOLINT

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent_polynomial() const { return den_ == LaurentPoly(Rational(1)); }

  LaurentRational& operator+=(const LaurentRational& o);
  LaurentRational& operator-=(const LaurentRational& o);
  LaurentRational& operator*=(const LaurentRational& o);
  LaurentRational& operator/=(const LaurentRational& o);

  friend LaurentRational operator+(LaurentRational a, const LaurentRational& b) { return a += b; }
  friend LaurentRational operator-(LaurentRational a, const LaurentRational& b) { return a -= b; }
  friend LaurentRational operator*(LaurentRational a, const LaurentRational& b) { return a *= b; }
  friend LaurentRational operator/(LaurentRational a, const LaurentRational& b) { return a /= b; }
  friend LaurentRational operator-(LaurentRational a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const LaurentRational& a, const LaurentRational& b) = default;

 private:
  friend LaurentRational rf_reduce(const LaurentPoly& num, const LaurentPoly& den);
  friend struct CanonicalAccess;
  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool is_zero(const LaurentRational& r) { return r.is_zero(); }
LaurentRational invert_element(const LaurentRational& r);
std::string to_string(const LaurentRational& r);

/// Canonical form of num/den; throws ZeroDenominator.
LaurentRational rf_reduce(const LaurentPoly& num, const LaurentPoly& den);
/// Re-canonicalises an existing value (idempotent).
LaurentRational rf_reduce(const LaurentRational& a);

/// Exact value at a rational point; throws PoleAtEvaluationPoint.
Rational rf_eval(const LaurentRational& a, const Rational& at);
/// Numeric value at a complex point; throws PoleAtEvaluationPoint when the
/// reduced denominator vanishes there to double precision.
std::complex<double> rf_eval(const LaurentRational& a, std::complex<double> at);

/// Denominator scale * lambda^{lambdaPower} * prod_d Phi_d^{factors[d]}.
struct CyclotomicDenominator {
  Rational scale{1};
  long lambdaPower = 0;
  std::map<int, int> factors;

  CyclotomicDenominator& operator*=(const CyclotomicDenominator& o);
  LaurentPoly expand() const;
};

/// Denominator of 1/(lambda^h - lambda^{-h}) for h != 0, factored.
CyclotomicDenominator half_difference_denominator(long h);

/// Canonical form of num/den without a general gcd: the irreducible
/// factors of den are known, so cancellation is trial division.
LaurentRational reduce_over_cyclotomics(LaurentPoly num, const CyclotomicDenominator& den);

}  // namespace cprig
