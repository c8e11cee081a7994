#include "cprig/power_series.hpp"

#include <algorithm>

namespace cprig {

PowerSeries PowerSeries::one(int degree) {
  auto s = zero(degree);
  s[0] = 1;
  return s;
}

PowerSeries PowerSeries::exp_scaled(const Rational& s, int degree) {
  std::vector<Rational> c(degree + 1);
  Rational term(1);
  for (int k = 0; k <= degree; ++k) {
    c[k] = term;
    term *= s;
    term /= k + 1;
  }
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncated(int degree) const {
  std::vector<Rational> c(degree + 1);
  for (int k = 0; k <= degree && k <= this->degree(); ++k) c[k] = c_[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int d = std::min(a.degree(), b.degree());
  std::vector<Rational> c(d + 1);
  for (int k = 0; k <= d; ++k) c[k] = a[k] + b[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const int d = std::min(a.degree(), b.degree());
  std::vector<Rational> c(d + 1);
  for (int k = 0; k <= d; ++k) c[k] = a[k] - b[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int d = std::min(a.degree(), b.degree());
  std::vector<Rational> c(d + 1);
  for (int i = 0; i <= d; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; i + j <= d; ++j) c[i + j] += a[i] * b[j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
  std::vector<Rational> c(a.coeffs());
  for (auto& v : c) v *= s;
  return PowerSeries(std::move(c));
}

PowerSeries inverse(const PowerSeries& a) {
  const Rational inv0 = invert_element(a[0]);
  const int d = a.degree();
  std::vector<Rational> b(d + 1);
  b[0] = inv0;
  for (int n = 1; n <= d; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
    b[n] = -inv0 * acc;
  }
  return PowerSeries(std::move(b));
}

PowerSeries log(const PowerSeries& a) {
  if (a[0] != 1) fail(ErrorCode::InvalidArgument, "log of a series needs constant term 1");
  // (log a)' = a'/a
  const int d = a.degree();
  std::vector<Rational> deriv(d + 1);
  for (int k = 1; k <= d; ++k) deriv[k - 1] = a[k] * k;
  const PowerSeries q = PowerSeries(std::move(deriv)) * inverse(a);
  std::vector<Rational> c(d + 1);
  for (int k = 1; k <= d; ++k) c[k] = q[k - 1] / k;
  return PowerSeries(std::move(c));
}

PowerSeries exp(const PowerSeries& a) {
  if (!is_zero(a[0])) fail(ErrorCode::NonNilpotentInput, "exp of a series needs constant term 0");
  // b' = a' b, solved term by term
  const int d = a.degree();
  std::vector<Rational> b(d + 1);
  b[0] = 1;
  for (int n = 1; n <= d; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k] * k;
    b[n] = acc / n;
  }
  return PowerSeries(std::move(b));
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  if (!is_zero(g[0])) fail(ErrorCode::NonNilpotentInput, "inner series of a composition needs constant term 0");
  const int d = std::min(f.degree(), g.degree());
  auto result = PowerSeries::zero(d);
  auto power = PowerSeries::one(d);
  for (int k = 0; k <= d; ++k) {
    result = result + f[k] * power;
    power = power * g.truncated(d);
  }
  return result;
}

PowerSeries sinh_half_over_t_series(int degree) {
  // sum_k t^{2k} / (4^k (2k+1)!)
  auto s = PowerSeries::zero(degree);
  for (int k = 0; 2 * k <= degree; ++k) s[2 * k] = Rational(1) / (pow(Rational(4), k) * factorial(2 * k + 1));
  return s;
}

PowerSeries aroof_genus_series(int degree) { return inverse(sinh_half_over_t_series(degree)); }

PowerSeries l_genus_series(int degree) {
  // t cosh t / sinh t
  auto cosh = PowerSeries::zero(degree);
  auto sinh_over_t = PowerSeries::zero(degree);
  for (int k = 0; 2 * k <= degree; ++k) {
    cosh[2 * k] = Rational(1) / factorial(2 * k);
    sinh_over_t[2 * k] = Rational(1) / factorial(2 * k + 1);
  }
  return cosh * inverse(sinh_over_t);
}

}  // namespace cprig
