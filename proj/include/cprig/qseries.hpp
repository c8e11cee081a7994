#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "cprig/error.hpp"

namespace cprig {

/// Power series in q truncated at q^order, coefficients in a ring C.
/// Binary operations work to the smaller of the two orders.
template <class C>
class QSeries {
 public:
  QSeries() = default;
  QSeries(int order, std::vector<C> coeffs) : c_(std::move(coeffs)) {
    if (order < 0) fail(ErrorCode::InvalidArgument, "q-series order must be non-negative");
    if (c_.size() != static_cast<std::size_t>(order) + 1)
      fail(ErrorCode::InvalidArgument, "q-series needs order+1 coefficients");
  }
  /// c in degree 0, `zero` elsewhere.
  static QSeries constant(int order, C c, const C& zero) {
    std::vector<C> v(static_cast<std::size_t>(order) + 1, zero);
    v[0] = std::move(c);
    return QSeries(order, std::move(v));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& operator[](int n) const { return c_[n]; }
  C& operator[](int n) { return c_[n]; }
  const std::vector<C>& coeffs() const { return c_; }

  QSeries truncated(int order) const {
    const int o = std::min(order, this->order());
    return QSeries(o, std::vector<C>(c_.begin(), c_.begin() + o + 1));
  }

  /// this * (1 - q^n u)
  QSeries& mul_binomial(int n, const C& u) {
    for (int k = order(); k >= n; --k) c_[k] -= u * c_[k - n];
    return *this;
  }
  /// this / (1 - q^n u), n >= 1
  QSeries& div_binomial(int n, const C& u) {
    if (n < 1) fail(ErrorCode::NonUnitConstantTerm, "1 - u is not a unit for n = 0");
    for (int k = n; k <= order(); ++k) c_[k] += u * c_[k - n];
    return *this;
  }

  QSeries& operator*=(const C& s) {
    for (auto& v : c_) v = v * s;
    return *this;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    const int o = std::min(a.order(), b.order());
    std::vector<C> v;
    v.reserve(o + 1);
    for (int k = 0; k <= o; ++k) v.push_back(a.c_[k] + b.c_[k]);
    return QSeries(o, std::move(v));
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    const int o = std::min(a.order(), b.order());
    std::vector<C> v;
    v.reserve(o + 1);
    for (int k = 0; k <= o; ++k) v.push_back(a.c_[k] - b.c_[k]);
    return QSeries(o, std::move(v));
  }
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const int o = std::min(a.order(), b.order());
    std::vector<C> v;
    v.reserve(o + 1);
    for (int k = 0; k <= o; ++k) {
      C acc = a.c_[0] * b.c_[k];
      for (int i = 1; i <= k; ++i) acc += a.c_[i] * b.c_[k - i];
      v.push_back(std::move(acc));
    }
    return QSeries(o, std::move(v));
  }
  friend QSeries operator*(QSeries a, const C& s) { return a *= s; }
  friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<C> c_;
};

/// 1/a to the order of a; the q^0 coefficient must be a unit of C
/// (NonUnitConstantTerm otherwise).
template <class C>
QSeries<C> series_invert(const QSeries<C>& a) {
  C inv0 = invert_element(a[0]);
  std::vector<C> b;
  b.reserve(a.order() + 1);
  b.push_back(inv0);
  for (int n = 1; n <= a.order(); ++n) {
    C acc = a[1] * b[n - 1];
    for (int k = 2; k <= n; ++k) acc += a[k] * b[n - k];
    b.push_back(-(inv0 * acc));
  }
  return QSeries<C>(a.order(), std::move(b));
}

/// Apply f coefficientwise.
template <class C, class F>
auto map_coefficients(const QSeries<C>& a, F&& f) {
  using R = std::decay_t<decltype(f(a[0]))>;
  std::vector<R> v;
  v.reserve(a.order() + 1);
  for (const auto& c : a.coeffs()) v.push_back(f(c));
  return QSeries<R>(a.order(), std::move(v));
}

}  // namespace cprig
