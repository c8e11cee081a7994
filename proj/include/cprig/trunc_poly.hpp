#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cprig/power_series.hpp"
#include "cprig/rational.hpp"

namespace cprig {

/// Element of C[x]/(x^{m+1}): the cohomology ring of a cohomology CP^m
/// with coefficients in C. Every product drops terms of degree > m.
///
/// C must be constructible from an int (0 and 1), closed under + - *, and
/// provide a free is_zero(const C&).
template <class C>
class TruncPolyT {
 public:
  TruncPolyT() : TruncPolyT(0) {}
  explicit TruncPolyT(int m) : m_(m), c_(static_cast<std::size_t>(checked(m)) + 1, C(0)) {}
  TruncPolyT(int m, std::vector<C> coeffs) : m_(checked(m)), c_(std::move(coeffs)) {
    if (c_.size() > static_cast<std::size_t>(m) + 1) {
      for (std::size_t k = m + 1; k < c_.size(); ++k)
        if (!is_zero(c_[k])) fail(ErrorCode::InvalidArgument, "coefficient beyond x^m in truncated polynomial");
    }
    c_.resize(static_cast<std::size_t>(m) + 1, C(0));
  }

  static TruncPolyT constant(int m, C value) {
    TruncPolyT p(m);
    p.c_[0] = std::move(value);
    return p;
  }
  static TruncPolyT monomial(int m, C value, int degree) {
    TruncPolyT p(m);
    if (degree <= m) p.c_[degree] = std::move(value);
    return p;
  }
  /// x^degree, which vanishes once degree > m.
  static TruncPolyT x_power(int m, int degree) { return monomial(m, C(1), degree); }

  int m() const { return m_; }
  const C& operator[](int k) const { return c_[k]; }
  C& operator[](int k) { return c_[k]; }
  const std::vector<C>& coeffs() const { return c_; }
  const C& constant_term() const { return c_[0]; }

  bool is_zero_poly() const {
    for (const auto& v : c_)
      if (!is_zero(v)) return false;
    return true;
  }

  TruncPolyT& operator+=(const TruncPolyT& o) {
    same_ring(o);
    for (int k = 0; k <= m_; ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncPolyT& operator-=(const TruncPolyT& o) {
    same_ring(o);
    for (int k = 0; k <= m_; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  TruncPolyT& operator*=(const TruncPolyT& o) { return *this = *this * o; }
  TruncPolyT& operator*=(const C& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend TruncPolyT operator+(TruncPolyT a, const TruncPolyT& b) { return a += b; }
  friend TruncPolyT operator-(TruncPolyT a, const TruncPolyT& b) { return a -= b; }
  friend TruncPolyT operator-(TruncPolyT a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend TruncPolyT operator*(const TruncPolyT& a, const TruncPolyT& b) {
    a.same_ring(b);
    TruncPolyT r(a.m_);
    for (int i = 0; i <= a.m_; ++i) {
      if (is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= a.m_; ++j) {
        if (is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  friend TruncPolyT operator*(TruncPolyT a, const C& s) { return a *= s; }
  friend TruncPolyT operator*(const C& s, TruncPolyT a) { return a *= s; }
  friend bool operator==(const TruncPolyT& a, const TruncPolyT& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

 private:
  static int checked(int m) {
    if (m < 0) fail(ErrorCode::InvalidArgument, "truncation degree must be non-negative");
    return m;
  }
  void same_ring(const TruncPolyT& o) const {
    if (o.m_ != m_) fail(ErrorCode::InvalidArgument, "truncated polynomials from different rings");
  }

  int m_;
  std::vector<C> c_;
};

template <class C>
bool is_zero(const TruncPolyT<C>& p) {
  return p.is_zero_poly();
}

using TruncPoly = TruncPolyT<Rational>;

template <class C>
TruncPolyT<C> pow(const TruncPolyT<C>& a, long exponent) {
  if (exponent < 0) fail(ErrorCode::InvalidArgument, "negative power of a truncated polynomial; invert first");
  auto result = TruncPolyT<C>::constant(a.m(), C(1));
  auto base = a;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

/// f(a) = sum_k f_k a^k for a nilpotent a (zero constant term).
template <class C>
TruncPolyT<C> compose(const PowerSeries& f, const TruncPolyT<C>& a) {
  if (!is_zero(a.constant_term())) fail(ErrorCode::NonNilpotentInput, "substitution needs a nilpotent argument");
  const int m = a.m();
  TruncPolyT<C> result(m);
  auto power = TruncPolyT<C>::constant(m, C(1));
  for (int k = 0; k <= m && k <= f.degree(); ++k) {
    if (!is_zero(f[k])) result += power * C(f[k]);
    if (k < m) power *= a;
  }
  return result;
}

/// Truncated exponential; throws NonNilpotentInput unless a(0) = 0.
template <class C>
TruncPolyT<C> exp_nilpotent(const TruncPolyT<C>& a) {
  return compose(PowerSeries::exp_scaled(Rational(1), a.m()), a);
}

/// Inverse of a class whose constant term is a unit of C.
template <class C>
TruncPolyT<C> inverse(const TruncPolyT<C>& a) {
  const C inv0 = invert_element(a.constant_term());
  const int m = a.m();
  TruncPolyT<C> b(m);
  b[0] = inv0;
  for (int n = 1; n <= m; ++n) {
    C acc(0);
    for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
    b[n] = -(inv0 * acc);
  }
  return b;
}

template <class C>
TruncPolyT<C> invert_element(const TruncPolyT<C>& a) {
  return inverse(a);
}

/// Evaluation against the fundamental class: the coefficient of x^m.
inline Rational pair_fundamental(const TruncPoly& a) { return a[a.m()]; }

/// e^{s x} in Q[x]/(x^{m+1}).
inline TruncPoly exp_x(int m, const Rational& s) {
  return TruncPoly(m, PowerSeries::exp_scaled(s, m).coeffs());
}

std::string to_string(const TruncPoly& p);

}  // namespace cprig
