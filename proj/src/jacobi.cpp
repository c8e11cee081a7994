#include "cprig/jacobi.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>

#include "cprig/lefschetz.hpp"

namespace cprig {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0, 1);

Json complex_json(Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

Json point_json(const ModularPoint& p) { return Json{{"tau", complex_json(p.tau)}, {"z", complex_json(p.z)}}; }

VerificationReport numeric_report(std::string name, double residual, double threshold, Json params, Json value) {
  const bool ok = std::isfinite(residual) && residual <= threshold;
  VerificationReport r;
  r.checkName = std::move(name);
  r.status = ok ? Status::NumericPass : Status::Fail;
  r.params = std::move(params);
  r.params["tolerance"] = threshold;
  r.value = std::move(value);
  r.value["residual"] = residual;
  if (!ok) r.witness = Json{{"residual", residual}, {"threshold", threshold}};
  return r;
}

}  // namespace

ModularPoint ModularPoint::make(Complex tau, Complex z) {
  if (!(tau.imag() > 0)) fail(ErrorCode::InvalidArgument, "tau must lie in the upper half plane");
  return ModularPoint{tau, z};
}

Truncation choose_truncation(Complex tau, Complex z, const NumericPolicy& policy) {
  if (!(tau.imag() > 0)) fail(ErrorCode::InvalidArgument, "tau must lie in the upper half plane");
  if (!(policy.tolerance > 0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  const double logr = -2 * kPi * tau.imag();
  const double r = std::exp(logr);
  const double logR = 2 * kPi * std::abs(z.imag());
  const double target = policy.tolerance / 10;
  for (int n = 0; n <= policy.maxProductTerms; ++n) {
    const double logT = (n + 1) * logr + logR;  // log(|q|^{N+1} R)
    if (logT >= 0) continue;
    const double t = std::exp(logT);
    const double rn = std::exp((n + 1) * logr);
    const double eps = (2 * t + 2 * rn) / ((1 - r) * (1 - t));
    const double bound = std::expm1(eps);
    if (bound <= target) return Truncation{n, bound};
  }
  fail(ErrorCode::TailBoundViolation, "product truncation above " + std::to_string(policy.maxProductTerms) +
                                          " terms needed for tolerance " + std::to_string(policy.tolerance));
}

Complex phi_eval(const ModularPoint& p, const NumericPolicy& policy, Truncation* used) {
  const Truncation t = choose_truncation(p.tau, p.z, policy);
  if (used) *used = t;
  const Complex mu = std::exp(kPi * kI * p.z);
  const Complex lambda = mu * mu;
  const Complex q = std::exp(2 * kPi * kI * p.tau);
  Complex value = mu - 1.0 / mu;
  Complex qn = 1;
  for (int n = 1; n <= t.terms; ++n) {
    qn *= q;
    const Complex den = 1.0 - qn;
    value *= (1.0 - qn * lambda) * (1.0 - qn / lambda) / (den * den);
  }
  return value;
}

double relative_residual(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  const double diff = std::abs(a - b);
  return scale > 1e-12 ? diff / scale : diff;
}

VerificationReport lattice_shift_check(const ModularPoint& p, long alpha, long beta, const NumericPolicy& policy) {
  Truncation t1, t2;
  const Complex shifted = p.z + static_cast<double>(alpha) * p.tau + static_cast<double>(beta);
  const Complex lhs = phi_eval(ModularPoint{p.tau, shifted}, policy, &t1);
  const double a = static_cast<double>(alpha);
  const double sign = ((alpha + beta) % 2 == 0) ? 1.0 : -1.0;
  const Complex rhs = phi_eval(p, policy, &t2) * std::exp(-kPi * kI * (a * a * p.tau + 2 * a * p.z)) * sign;
  Json params = point_json(p);
  params["alpha"] = alpha;
  params["beta"] = beta;
  return numeric_report("lattice-shift", relative_residual(lhs, rhs), policy.tolerance, params,
                        Json{{"lhs", complex_json(lhs)}, {"rhs", complex_json(rhs)}, {"productTerms", std::max(t1.terms, t2.terms)},
                             {"tailBound", std::max(t1.tailBound, t2.tailBound)}});
}

VerificationReport modular_check(const ModularPoint& p, const SL2Z& A, const NumericPolicy& policy) {
  if (A.a * A.d - A.b * A.c != 1) fail(ErrorCode::MatrixNotUnimodular, "matrix determinant is not 1");
  const Complex j = static_cast<double>(A.c) * p.tau + static_cast<double>(A.d);
  const ModularPoint moved = ModularPoint::make((static_cast<double>(A.a) * p.tau + static_cast<double>(A.b)) / j, p.z / j);
  Truncation t1, t2;
  const Complex lhs = phi_eval(moved, policy, &t1);
  const Complex rhs = phi_eval(p, policy, &t2) / j * std::exp(kPi * kI * static_cast<double>(A.c) * p.z * p.z / j);
  Json params = point_json(p);
  params["matrix"] = Json::array({A.a, A.b, A.c, A.d});
  return numeric_report("modular", relative_residual(lhs, rhs), policy.tolerance, params,
                        Json{{"lhs", complex_json(lhs)}, {"rhs", complex_json(rhs)}, {"productTerms", std::max(t1.terms, t2.terms)},
                             {"tailBound", std::max(t1.tailBound, t2.tailBound)}});
}

double lattice_distance(Complex tau, Complex w) {
  const double u = w.imag() / tau.imag();
  double best = std::numeric_limits<double>::infinity();
  for (long k = static_cast<long>(std::floor(u)) - 1; k <= static_cast<long>(std::floor(u)) + 2; ++k) {
    const Complex rest = w - static_cast<double>(k) * tau;
    const double l = std::round(rest.real());
    best = std::min(best, std::abs(rest - l));
  }
  return best;
}

Complex FY_eval(const std::vector<long>& tangentWeights, const std::vector<long>& vWeights, const ModularPoint& p,
                const NumericPolicy& policy) {
  Complex value = 1;
  for (long m : tangentWeights) {
    if (m == 0) continue;
    const Complex w = static_cast<double>(m) * p.z;
    const double dist = lattice_distance(p.tau, w);
    if (dist < policy.poleDistance)
      fail(ErrorCode::PoleProximity, "weight " + std::to_string(m) + " puts z within " + std::to_string(dist) + " of a lattice point");
    value /= phi_eval(ModularPoint{p.tau, w}, policy);
  }
  for (long s : vWeights) {
    if (s == 0) continue;
    value *= phi_eval(ModularPoint{p.tau, static_cast<double>(s) * p.z}, policy);
  }
  return value;
}

long fy_index(const std::vector<long>& tangentWeights, const std::vector<long>& vWeights) {
  long twice = 0;
  for (long s : vWeights) {
    if (s % 2 != 0) fail(ErrorCode::OddHalfWeight, "index law needs even weights");
    twice += s * s;
  }
  for (long m : tangentWeights) {
    if (m % 2 != 0) fail(ErrorCode::OddHalfWeight, "index law needs even weights");
    twice -= m * m;
  }
  return twice / 2;
}

VerificationReport fy_index_law_check(const std::vector<long>& tangentWeights, const std::vector<long>& vWeights,
                                      const ModularPoint& p, long alpha, long beta, const NumericPolicy& policy) {
  const long index = fy_index(tangentWeights, vWeights);
  const double a = static_cast<double>(alpha);
  const Complex shifted = p.z + a * p.tau + static_cast<double>(beta);
  const Complex lhs = FY_eval(tangentWeights, vWeights, ModularPoint{p.tau, shifted}, policy);
  const Complex rhs = FY_eval(tangentWeights, vWeights, p, policy) *
                      std::exp(-2 * kPi * kI * static_cast<double>(index) * (a * a * p.tau + 2 * a * p.z));
  Json params = point_json(p);
  params["alpha"] = alpha;
  params["beta"] = beta;
  params["tangentWeights"] = tangentWeights;
  params["vWeights"] = vWeights;
  return numeric_report("fy-index-law", relative_residual(lhs, rhs), policy.tolerance, params,
                        Json{{"index", index}, {"lhs", complex_json(lhs)}, {"rhs", complex_json(rhs)}});
}

QSeries<LaurentPoly> phi_exact_series(int order) {
  const LaurentPoly one(1);
  const LaurentPoly mu2 = LaurentPoly::monomial(Rational(1), 2);
  const LaurentPoly muMinus2 = LaurentPoly::monomial(Rational(1), -2);
  auto s = QSeries<LaurentPoly>::constant(order, LaurentPoly::monomial(Rational(1), 1) - LaurentPoly::monomial(Rational(1), -1),
                                          LaurentPoly());
  for (int n = 1; n <= order; ++n) s.mul_binomial(n, mu2).mul_binomial(n, muMinus2).div_binomial(n, one).div_binomial(n, one);
  return s;
}

VerificationReport phi_series_cross_check(const ModularPoint& p, int order, const NumericPolicy& policy) {
  if (order < 0) fail(ErrorCode::InvalidArgument, "negative q-order");
  Truncation t;
  const Complex numeric = phi_eval(p, policy, &t);
  const Complex mu = std::exp(kPi * kI * p.z);
  const Complex q = std::exp(2 * kPi * kI * p.tau);
  const auto series = phi_exact_series(order);
  Complex exact = 0, qn = 1;
  double magnitude = 0;
  for (int n = 0; n <= order; ++n) {
    const Complex term = series[n].eval(mu) * qn;
    exact += term;
    magnitude += std::abs(term);
    qn *= q;
  }
  // majorant: (|mu| + 1/|mu|) prod (1 + r^n |lambda|)(1 + r^n/|lambda|)/(1 - r^n)^2 in r = |q|
  const double r = std::abs(q);
  const double lam = std::norm(mu);
  const int K = order + 200;
  std::vector<double> maj(K + 1, 0.0);
  maj[0] = std::abs(mu) + 1 / std::abs(mu);
  for (int n = 1; n <= K; ++n) {
    for (double u : {lam, 1 / lam})
      for (int k = K; k >= n; --k) maj[k] += u * maj[k - n];
    for (int rep = 0; rep < 2; ++rep)
      for (int k = n; k <= K; ++k) maj[k] += maj[k - n];
  }
  double seriesTail = 0;
  for (int k = order + 1; k <= K; ++k) seriesTail += maj[k] * std::pow(r, k);
  seriesTail += maj[K] * std::pow(r, K + 1) / (1 - r);
  const double allowed = seriesTail + t.tailBound * std::abs(numeric) + 1e-12 * std::max(1.0, magnitude);
  const double gap = std::abs(numeric - exact);
  const bool ok = gap <= allowed;
  VerificationReport rep;
  rep.checkName = "phi-series";
  rep.status = ok ? Status::NumericPass : Status::Fail;
  rep.params = point_json(p);
  rep.params["qOrder"] = order;
  rep.value = Json{{"numeric", complex_json(numeric)}, {"series", complex_json(exact)}, {"gap", gap}, {"allowed", allowed},
                   {"seriesTailBound", seriesTail}, {"productTailBound", t.tailBound}};
  if (!ok) rep.witness = Json{{"gap", gap}, {"allowed", allowed}};
  return rep;
}

namespace {

struct Sampled {
  Complex sum;
  double maxTerm = 0;
};

Sampled sum_local_data(const FixedPointData& data, const SpincData& spinc, Complex tau, double z, const NumericPolicy& policy) {
  Sampled out;
  for (const auto& y : data.components) {
    if (y.dY != 0) fail(ErrorCode::InvalidArgument, "numeric scan supports isolated fixed points only");
    if (fixed_rank(y.VRoots) > 0) continue;  // phi(q, 1) = 0
    const long l = y.spincWeight.value_or(spinc.c1 * y.gammaWeight);
    long sumS = 0;
    for (const auto& v : y.VRoots) sumS += v.multiplicity * v.weight;
    Complex term = std::exp(kPi * kI * static_cast<double>(l - sumS) * z);
    for (const auto& nrm : y.normal)
      for (long i = 0; i < nrm.multiplicity; ++i) term /= phi_eval(ModularPoint{tau, static_cast<double>(nrm.weight) * z}, policy);
    for (const auto& v : y.VRoots)
      for (long i = 0; i < v.multiplicity; ++i) term *= phi_eval(ModularPoint{tau, static_cast<double>(v.weight) * z}, policy);
    out.maxTerm = std::max(out.maxTerm, std::abs(term));
    out.sum += term;
  }
  return out;
}

}  // namespace

ScanResult real_line_pole_scan(const FixedPointData& data, const SpincData& spinc, Complex tau, int points,
                               const NumericPolicy& policy, double growthTolerance, int exactOrder) {
  data.validate();
  if (points < 2) fail(ErrorCode::InvalidArgument, "scan needs at least two points");
  const double theta = (std::sqrt(5.0) - 1) / 2;

  std::optional<QSeries<LaurentRational>> exact;
  if (exactOrder >= 0) exact = lefschetz_series(data, spinc, exactOrder);
  const Complex q = std::exp(2 * kPi * kI * tau);

  ScanResult result;
  double coarseMax = 0, refinedMax = 0, maxTerm = 0, maxDeviation = 0, zAtMax = 0;
  bool poleSurvives = false;
  for (int pass = 0; pass < 2; ++pass) {
    const int count = pass == 0 ? points : 10 * points;
    for (int k = 0; k < count; ++k) {
      const double z = (k + theta) / count;
      const Sampled s = sum_local_data(data, spinc, tau, z, policy);
      const double mag = std::abs(s.sum);
      maxTerm = std::max(maxTerm, s.maxTerm);
      if (pass == 0) {
        result.samples.push_back({z, s.sum});
        coarseMax = std::max(coarseMax, mag);
      } else if (mag > refinedMax) {
        refinedMax = mag;
        zAtMax = z;
      }
      if (exact) {
        const Complex lambda = std::exp(2 * kPi * kI * z);
        Complex e = 0, qn = 1;
        for (int n = 0; n <= exactOrder; ++n) {
          const auto& c = (*exact)[n];
          if (!c.is_laurent_polynomial()) {
            poleSurvives = true;
            break;
          }
          e += c.num().eval(lambda) * qn;
          qn *= q;
        }
        maxDeviation = std::max(maxDeviation, std::abs(s.sum - e) / std::max(1.0, std::abs(e)));
      }
    }
  }
  const bool finite = std::isfinite(coarseMax) && std::isfinite(refinedMax);
  const bool stable = finite && refinedMax <= (1 + growthTolerance) * coarseMax + policy.sumTolerance;
  const bool matches = !exact || (!poleSurvives && maxDeviation <= policy.sumTolerance);
  const bool ok = stable && matches;

  Json params{{"m", data.m}, {"c1", spinc.c1}, {"tau", complex_json(tau)}, {"points", points}, {"refinedPoints", 10 * points},
              {"offset", theta}, {"growthTolerance", growthTolerance}, {"exactOrder", exactOrder}, {"tolerance", policy.tolerance}};
  Json value{{"coarseMax", coarseMax}, {"refinedMax", refinedMax}, {"zAtRefinedMax", zAtMax}, {"maxIndividualTerm", maxTerm}};
  if (exact) value["maxExactDeviation"] = maxDeviation;
  VerificationReport rep;
  rep.checkName = "pole-scan";
  rep.status = ok ? Status::NumericPass : Status::Fail;
  rep.params = params;
  rep.value = value;
  if (!ok)
    rep.witness = Json{{"error", std::string(to_string(ErrorCode::CancellationFailure))}, {"stable", stable}, {"matchesExact", matches},
                       {"poleSurvivesReduction", poleSurvives}, {"zAtRefinedMax", zAtMax}};
  result.report = std::move(rep);
  return result;
}

std::string scan_csv(const std::vector<ScanSample>& samples) {
  std::string out = "z,re,im,abs\n";
  char buf[128];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.z, s.value.real(), s.value.imag(), std::abs(s.value));
    out += buf;
  }
  return out;
}

}  // namespace cprig
