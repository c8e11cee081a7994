#include "cprig/lefschetz.hpp"

#include <algorithm>

namespace cprig {

namespace {

/// e^{s y} lambda^{e} in H^*(Y)[lambda, lambda^-1], Y of dimension d.
EquivClass exp_root(int d, const Rational& s, long e) {
  const TruncPoly ex = exp_x(d, s);
  EquivClass r(d);
  for (int k = 0; k <= d; ++k) r[k] = LaurentPoly::monomial(ex[k], e);
  return r;
}

EquivClass lift(const TruncPoly& p) {
  EquivClass r(p.m());
  for (int k = 0; k <= p.m(); ++k) r[k] = LaurentPoly(p[k]);
  return r;
}

EquivClass signed_pow(const EquivClass& a, long k) {
  if (k >= 0) return pow(a, k);
  return pow(inverse(a), -k);
}

long half(long w, const char* what) {
  if (w % 2 != 0) fail(ErrorCode::OddHalfWeight, std::string(what) + " weight " + std::to_string(w) + " is odd");
  return w / 2;
}

/// e^{r/2} lambda^{w/2} - e^{-r/2} lambda^{-w/2}, r = c y.
EquivClass phi_head(int d, long c, long w) {
  const long h = half(w, "phi");
  return exp_root(d, make_rational(c, 2), h) - exp_root(d, make_rational(-c, 2), -h);
}

}  // namespace

LocalClass local_class(const FixedComponent& y, const SpincData& spinc, int order) {
  if (order < 0) fail(ErrorCode::InvalidArgument, "negative q-order");
  const int d = y.dY;
  const EquivClass one = EquivClass::constant(d, LaurentPoly(1));

  const long cRoot = spinc.c1 * y.gammaRoot;
  const long l = y.spincWeight.value_or(spinc.c1 * y.gammaWeight);
  long sumV = 0, sumS = 0;
  for (const auto& v : y.VRoots) {
    if (v.multiplicity < 0) fail(ErrorCode::InvalidArgument, "local terms need an honest (non-virtual) V");
    sumV += v.multiplicity * v.chernRoot;
    sumS += v.multiplicity * v.weight;
  }
  EquivClass head = exp_root(d, make_rational(cRoot - sumV, 2), half(l - sumS, "Spin^c prefactor"));

  // x/phi(q, e^x) on TY: q^0 part is the Ahat factor
  const PowerSeries g = aroof_genus_series(d);
  for (const auto& t : y.tangentRoots)
    head *= signed_pow(lift(compose(g, TruncPoly::monomial(d, Rational(t.chernRoot), 1))), t.multiplicity);

  // 1/(u + N) = sum_k (-N)^k u^{d-k} / u^{d+1}
  CyclotomicDenominator den;
  for (const auto& nrm : y.normal) {
    if (nrm.weight == 0) fail(ErrorCode::ZeroNormalWeight, "normal summand with weight 0");
    const EquivClass full = phi_head(d, nrm.chernRoot, nrm.weight);
    const LaurentPoly u = full[0];
    const EquivClass minusN = EquivClass::constant(d, u) - full;
    EquivClass numer(d);
    EquivClass power = one;
    for (int k = 0; k <= d; ++k) {
      numer += power * pow(u, d - k);
      power *= minusN;
    }
    head *= pow(numer, nrm.multiplicity);
    const auto hd = half_difference_denominator(nrm.weight / 2);
    for (long i = 0; i < (d + 1) * nrm.multiplicity; ++i) den *= hd;
  }

  for (const auto& v : y.VRoots) head *= pow(phi_head(d, v.chernRoot, v.weight), v.multiplicity);

  auto series = QSeries<EquivClass>::constant(order, head, EquivClass(d));
  for (int n = 1; n <= order; ++n) {
    for (const auto& t : y.tangentRoots) {
      const EquivClass up = exp_root(d, Rational(t.chernRoot), 0);
      const EquivClass down = exp_root(d, Rational(-t.chernRoot), 0);
      for (long i = 0; i < std::labs(t.multiplicity); ++i) {
        if (t.multiplicity > 0) {
          series.mul_binomial(n, one).mul_binomial(n, one).div_binomial(n, up).div_binomial(n, down);
        } else {
          series.mul_binomial(n, up).mul_binomial(n, down).div_binomial(n, one).div_binomial(n, one);
        }
      }
    }
    for (const auto& nrm : y.normal) {
      const EquivClass up = exp_root(d, Rational(nrm.chernRoot), nrm.weight);
      const EquivClass down = exp_root(d, Rational(-nrm.chernRoot), -nrm.weight);
      for (long i = 0; i < nrm.multiplicity; ++i)
        series.mul_binomial(n, one).mul_binomial(n, one).div_binomial(n, up).div_binomial(n, down);
    }
    for (const auto& v : y.VRoots) {
      const EquivClass up = exp_root(d, Rational(v.chernRoot), v.weight);
      const EquivClass down = exp_root(d, Rational(-v.chernRoot), -v.weight);
      for (long i = 0; i < v.multiplicity; ++i)
        series.mul_binomial(n, up).mul_binomial(n, down).div_binomial(n, one).div_binomial(n, one);
    }
  }
  return LocalClass{std::move(series), std::move(den)};
}

LocalTerm local_term(const FixedComponent& y, const SpincData& spinc, int order) {
  LocalClass c = local_class(y, spinc, order);
  const int d = y.dY;
  auto paired = map_coefficients(c.numerator, [d](const EquivClass& a) { return a[d]; });
  return LocalTerm{std::move(paired), std::move(c.denominator)};
}

QSeries<LaurentRational> LocalTerm::reduced() const {
  return map_coefficients(numerator, [this](const LaurentPoly& p) { return reduce_over_cyclotomics(p, denominator); });
}

bool LocalTerm::is_zero() const {
  for (const auto& c : numerator.coeffs())
    if (!c.is_zero()) return false;
  return true;
}

QSeries<LaurentRational> lefschetz_series(const FixedPointData& data, const SpincData& spinc, int order) {
  data.validate();
  if (spinc.m != data.m) fail(ErrorCode::InvalidArgument, "Spin^c data for a different dimension");
  std::vector<LocalTerm> terms;
  for (const auto& y : data.components) {
    LocalTerm t = local_term(y, spinc, order);
    if (!t.is_zero()) terms.push_back(std::move(t));
  }
  // common denominator: lowest lambda power, highest cyclotomic exponents
  CyclotomicDenominator common;
  bool first = true;
  for (const auto& t : terms) {
    common.lambdaPower = first ? t.denominator.lambdaPower : std::min(common.lambdaPower, t.denominator.lambdaPower);
    first = false;
    for (const auto& [dd, k] : t.denominator.factors) common.factors[dd] = std::max(common.factors[dd], k);
  }
  std::vector<LaurentPoly> total(order + 1);
  for (const auto& t : terms) {
    LaurentPoly mult = LaurentPoly::monomial(Rational(1) / t.denominator.scale, common.lambdaPower - t.denominator.lambdaPower);
    for (const auto& [dd, k] : common.factors) {
      auto it = t.denominator.factors.find(dd);
      const int have = it == t.denominator.factors.end() ? 0 : it->second;
      for (int i = have; i < k; ++i) mult *= cyclotomic(dd);
    }
    for (int n = 0; n <= order; ++n) total[n] += t.numerator[n] * mult;
  }
  std::vector<LaurentRational> out;
  out.reserve(order + 1);
  for (int n = 0; n <= order; ++n) out.push_back(reduce_over_cyclotomics(total[n], common));
  return QSeries<LaurentRational>(order, std::move(out));
}

LefschetzResult lefschetz_sum(const FixedPointData& data, const SpincData& spinc, const RootBundle& vGlobal, int order) {
  const FixedPointData withV = assign_V(data, vGlobal);
  auto sum = lefschetz_series(withV, spinc, order);
  auto expected = index_series(spinc, twist_UV(cpm_tangent(data.m), vGlobal, data.m, order));

  Json rows = Json::array();
  Json witness = nullptr;
  for (int n = 0; n <= order; ++n) {
    const auto& c = sum[n];
    Json row{{"qOrder", n}, {"laurentPolynomial", c.is_laurent_polynomial()}};
    if (!c.is_laurent_polynomial()) {
      row["value"] = to_json(c);
      if (witness.is_null())
        witness = Json{{"error", std::string(to_string(ErrorCode::PoleSurvivesReduction))}, {"qOrder", n}, {"coefficient", to_json(c)}};
    } else {
      const Rational atOne = c.num().eval(Rational(1));
      row["value"] = to_json(c.num());
      row["atOne"] = to_json(atOne);
      row["expected"] = to_json(expected[n]);
      if (atOne != expected[n] && witness.is_null())
        witness = Json{{"error", "lambda=1 mismatch"}, {"qOrder", n}, {"atOne", to_json(atOne)}, {"expected", to_json(expected[n])}};
    }
    rows.push_back(std::move(row));
  }
  Json gammas = Json::array();
  for (const auto& y : data.components) gammas.push_back(y.gammaWeight);
  Json vj = Json::array();
  for (const auto& l : vGlobal.summands) vj.push_back(Json{{"gammaPower", l.chernRoot}, {"lambdaWeight", l.weight}, {"multiplicity", l.multiplicity}});
  Json params{{"m", data.m}, {"c1", spinc.c1}, {"qOrder", order}, {"gammaWeights", gammas}, {"V", vj}, {"units", "doubled"}};
  auto report = make_report("lefschetz", witness.is_null(), params, witness, Json{{"coefficients", rows}});
  return LefschetzResult{std::move(sum), std::move(expected), std::move(report)};
}

}  // namespace cprig
