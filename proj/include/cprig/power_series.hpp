#pragma once

#include <vector>

#include "cprig/rational.hpp"

namespace cprig {

/// Univariate formal power series over Q, stored as coefficients of
/// t^0 .. t^degree. Used to generate genus factors and to substitute into
/// nilpotent cohomology classes.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  static PowerSeries zero(int degree) { return PowerSeries(std::vector<Rational>(degree + 1)); }
  static PowerSeries one(int degree);
  /// e^{s t} truncated at t^degree.
  static PowerSeries exp_scaled(const Rational& s, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[k]; }
  Rational& operator[](int k) { return c_[k]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  PowerSeries truncated(int degree) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, const PowerSeries& a);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  std::vector<Rational> c_;
};

/// 1/a; requires a nonzero constant term.
PowerSeries inverse(const PowerSeries& a);
/// log(a); requires constant term 1.
PowerSeries log(const PowerSeries& a);
/// exp(a); requires constant term 0.
PowerSeries exp(const PowerSeries& a);
/// f(g) for g with zero constant term.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

/// t/(e^{t/2} - e^{-t/2}): the Ahat genus factor.
PowerSeries aroof_genus_series(int degree);
/// t/tanh(t): the Hirzebruch L genus factor.
PowerSeries l_genus_series(int degree);
/// (e^{t/2} - e^{-t/2})/t, the unit part of phi(q, e^t) at q^0.
PowerSeries sinh_half_over_t_series(int degree);

}  // namespace cprig
