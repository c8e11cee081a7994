#include "cprig/laurent.hpp"

#include <algorithm>
#include <mutex>

namespace cprig {

namespace {

using IntPoly = std::vector<Integer>;  // coefficients from degree 0 upward

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  trim_int(p);
  if (p.empty()) return;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Scale a rational coefficient vector to a primitive integer polynomial.
IntPoly to_primitive(const std::vector<Rational>& c) {
  Integer l = 1;
  for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntPoly p;
  p.reserve(c.size());
  for (const auto& v : c) {
    Integer t = l / v.get_den();
    p.push_back(v.get_num() * t);
  }
  make_primitive(p);
  return p;
}

/// Pseudo-remainder of a by b, made primitive.
IntPoly primitive_prem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_int(a);
  }
  make_primitive(a);
  return a;
}

IntPoly int_gcd(IntPoly a, IntPoly b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = primitive_prem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!cprig::is_zero(c)) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, long exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<long, Rational>& terms) {
  LaurentPoly p;
  if (terms.empty()) return p;
  p.low_ = terms.begin()->first;
  p.c_.assign(static_cast<std::size_t>(terms.rbegin()->first - p.low_ + 1), Rational(0));
  for (const auto& [e, v] : terms) p.c_[e - p.low_] = v;
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::from_dense(long low, std::vector<Rational> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && cprig::is_zero(c_.back())) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && cprig::is_zero(c_[lead])) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
  if (c_.empty()) low_ = 0;
}

Rational LaurentPoly::coeff(long exponent) const {
  if (c_.empty() || exponent < low_ || exponent > high()) return Rational(0);
  return c_[exponent - low_];
}

std::map<long, Rational> LaurentPoly::terms() const {
  std::map<long, Rational> t;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!cprig::is_zero(c_[i])) t.emplace(low_ + static_cast<long>(i), c_[i]);
  return t;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rational& v) { return !cprig::is_zero(v); }));
}

bool LaurentPoly::is_monomial() const { return c_.size() == 1; }

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

Rational LaurentPoly::eval(const Rational& x) const {
  if (is_zero()) return Rational(0);
  if (cprig::is_zero(x) && low_ < 0) fail(ErrorCode::PoleAtEvaluationPoint, "negative power of lambda at lambda = 0");
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc * pow(x, low_);
}

std::complex<double> LaurentPoly::eval(std::complex<double> x) const {
  if (is_zero()) return {0.0, 0.0};
  std::complex<double> acc{0.0, 0.0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc * std::pow(x, static_cast<int>(low_));
}

LaurentPoly LaurentPoly::substitute_power(long k) const {
  if (k == 0) return LaurentPoly(eval(Rational(1)));
  std::map<long, Rational> t;
  for (const auto& [e, v] : terms()) t[e * k] += v;
  return from_terms(t);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const long lo = std::min(low_, o.low_);
  const long hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - low_ + 1), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[o.low_ - low_ + static_cast<long>(i)] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator-(LaurentPoly a) {
  for (auto& v : a.c_) v = -v;
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (cprig::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (cprig::is_zero(b.c_[j])) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (cprig::is_zero(s)) return *this = LaurentPoly();
  for (auto& v : c_) v *= s;
  return *this;
}

LaurentPoly invert_element(const LaurentPoly& p) {
  if (!p.is_monomial()) fail(ErrorCode::NonUnitConstantTerm, "only monomials are invertible Laurent polynomials");
  return LaurentPoly::monomial(invert_element(p.leading()), -p.low());
}

LaurentPoly pow(const LaurentPoly& p, long exponent) {
  if (exponent < 0) return pow(invert_element(p), -exponent);
  LaurentPoly result(Rational(1));
  LaurentPoly base = p;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, v] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(v) + ")";
    if (e != 0) out += "L^" + std::to_string(e);
  }
  return out;
}

PolyDivision divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroDenominator, "polynomial division by zero");
  if (a.is_zero()) return {};
  // Work with ordinary polynomials A = a * L^{-a.low}, B = b * L^{-b.low}.
  std::vector<Rational> rem = a.dense();
  const auto& bd = b.dense();
  const std::size_t db = bd.size() - 1;
  std::vector<Rational> quo;
  if (rem.size() > db) quo.assign(rem.size() - db, Rational(0));
  const Rational inv_lead = Rational(1) / bd.back();
  for (std::size_t top = rem.size(); top-- > db;) {
    if (cprig::is_zero(rem[top])) continue;
    const Rational f = rem[top] * inv_lead;
    const std::size_t shift = top - db;
    quo[shift] = f;
    for (std::size_t i = 0; i <= db; ++i) rem[i + shift] -= f * bd[i];
  }
  rem.resize(std::min(rem.size(), db));
  PolyDivision out;
  out.quotient = LaurentPoly::from_dense(a.low() - b.low(), std::move(quo));
  out.remainder = LaurentPoly::from_dense(a.low(), std::move(rem));
  return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto d = divide(a, b);
  if (!d.remainder.is_zero()) return std::nullopt;
  return d.quotient;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  if (a.is_zero()) return b.shifted(-b.low()) * Rational(Rational(1) / b.leading());
  if (b.is_zero()) return a.shifted(-a.low()) * Rational(Rational(1) / a.leading());
  if (a.dense().size() == 1 || b.dense().size() == 1) return LaurentPoly(Rational(1));
  IntPoly g = int_gcd(to_primitive(a.dense()), to_primitive(b.dense()));
  std::vector<Rational> c;
  c.reserve(g.size());
  for (const auto& v : g) c.emplace_back(v);
  auto out = LaurentPoly::from_dense(0, std::move(c));
  return out * Rational(Rational(1) / out.leading());
}

namespace {

const LaurentPoly& build_cyclotomic(int d, std::map<int, LaurentPoly>& cache) {
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  // lambda^d - 1 divided by Phi_e for every proper divisor e
  LaurentPoly p = LaurentPoly::monomial(Rational(1), d) - LaurentPoly(Rational(1));
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = *divide_exact(p, build_cyclotomic(e, cache));
  return cache.emplace(d, std::move(p)).first->second;
}

}  // namespace

const LaurentPoly& cyclotomic(int d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<int, LaurentPoly> cache;
  std::lock_guard lock(mutex);
  return build_cyclotomic(d, cache);
}

// ------------------------------------------------------------ LaurentRational

struct CanonicalAccess {
  static LaurentRational make(LaurentPoly num, LaurentPoly den) {
    LaurentRational r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }
};

LaurentRational rf_reduce(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) fail(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) return LaurentRational();
  LaurentPoly n = num.shifted(-den.low());
  LaurentPoly d = den.shifted(-den.low());
  if (d.dense().size() > 1) {
    const LaurentPoly g = gcd(n, d);
    if (g.dense().size() > 1) {
      n = *divide_exact(n, g);
      d = *divide_exact(d, g);
    }
  }
  const Rational lead = d.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    n *= inv;
    d *= inv;
  }
  return CanonicalAccess::make(std::move(n), std::move(d));
}

LaurentRational rf_reduce(const LaurentRational& a) { return rf_reduce(a.num(), a.den()); }

LaurentRational& LaurentRational::operator+=(const LaurentRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) return *this = rf_reduce(num_ + o.num_, den_);
  const LaurentPoly g = gcd(den_, o.den_);
  const LaurentPoly a = *divide_exact(o.den_, g);  // o.den / g
  const LaurentPoly b = *divide_exact(den_, g);    // den / g
  return *this = rf_reduce(num_ * a + o.num_ * b, den_ * a);
}

LaurentRational& LaurentRational::operator-=(const LaurentRational& o) { return *this += -o; }

LaurentRational& LaurentRational::operator*=(const LaurentRational& o) {
  if (is_zero() || o.is_zero()) return *this = LaurentRational();
  if (is_laurent_polynomial() && o.is_laurent_polynomial()) return *this = CanonicalAccess::make(num_ * o.num_, den_);
  return *this = rf_reduce(num_ * o.num_, den_ * o.den_);
}

LaurentRational& LaurentRational::operator/=(const LaurentRational& o) {
  if (o.is_zero()) fail(ErrorCode::ZeroDenominator, "division by the zero rational function");
  return *this = rf_reduce(num_ * o.den_, den_ * o.num_);
}

LaurentRational invert_element(const LaurentRational& r) {
  if (r.is_zero()) fail(ErrorCode::NonUnitConstantTerm, "zero rational function is not invertible");
  return rf_reduce(r.den(), r.num());
}

std::string to_string(const LaurentRational& r) {
  if (r.is_laurent_polynomial()) return to_string(r.num());
  return "[" + to_string(r.num()) + "] / [" + to_string(r.den()) + "]";
}

Rational rf_eval(const LaurentRational& a, const Rational& at) {
  const LaurentRational r = rf_reduce(a);
  if (r.is_zero()) return Rational(0);
  const Rational d = r.den().eval(at);
  if (is_zero(d)) fail(ErrorCode::PoleAtEvaluationPoint, "denominator vanishes at " + to_string(at));
  return r.num().eval(at) / d;
}

std::complex<double> rf_eval(const LaurentRational& a, std::complex<double> at) {
  if (a.is_zero()) return {0.0, 0.0};
  const std::complex<double> d = a.den().eval(at);
  if (std::abs(d) == 0.0) fail(ErrorCode::PoleAtEvaluationPoint, "denominator vanishes at the sample point");
  return a.num().eval(at) / d;
}

// ------------------------------------------------------- cyclotomic reduction

CyclotomicDenominator& CyclotomicDenominator::operator*=(const CyclotomicDenominator& o) {
  scale *= o.scale;
  lambdaPower += o.lambdaPower;
  for (const auto& [d, k] : o.factors) factors[d] += k;
  return *this;
}

LaurentPoly CyclotomicDenominator::expand() const {
  LaurentPoly p = LaurentPoly::monomial(scale, lambdaPower);
  for (const auto& [d, k] : factors)
    for (int i = 0; i < k; ++i) p *= cyclotomic(d);
  return p;
}

CyclotomicDenominator half_difference_denominator(long h) {
  if (h == 0) fail(ErrorCode::ZeroNormalWeight, "lambda^h - lambda^-h vanishes for h = 0");
  // lambda^h - lambda^-h = sign * lambda^{-|h|} (lambda^{2|h|} - 1)
  CyclotomicDenominator den;
  const long a = h > 0 ? h : -h;
  den.scale = h > 0 ? 1 : -1;
  den.lambdaPower = -a;
  for (long d = 1; d <= 2 * a; ++d)
    if ((2 * a) % d == 0) den.factors[static_cast<int>(d)] += 1;
  return den;
}

LaurentRational reduce_over_cyclotomics(LaurentPoly num, const CyclotomicDenominator& den) {
  if (cprig::is_zero(den.scale)) fail(ErrorCode::ZeroDenominator, "zero scale in factored denominator");
  if (num.is_zero()) return LaurentRational();
  LaurentPoly rest(Rational(1));
  for (const auto& [d, k] : den.factors) {
    int remaining = k;
    while (remaining > 0) {
      auto q = divide_exact(num, cyclotomic(d));
      if (!q) break;
      num = std::move(*q);
      --remaining;
    }
    for (int i = 0; i < remaining; ++i) rest *= cyclotomic(d);
  }
  num = num.shifted(-den.lambdaPower);
  num *= Rational(Rational(1) / den.scale);
  return CanonicalAccess::make(std::move(num), std::move(rest));
}

}  // namespace cprig
