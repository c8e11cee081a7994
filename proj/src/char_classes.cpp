#include "cprig/char_classes.hpp"

#include <cstdlib>

namespace cprig {

namespace {

TruncPoly root_class(long c, int m) { return TruncPoly::monomial(m, Rational(c), 1); }

/// f^k for any integer k; negative powers need an invertible f.
TruncPoly signed_power(const TruncPoly& f, long k) {
  if (k >= 0) return pow(f, k);
  return pow(inverse(f), -k);
}

void require_paired(const RootBundle& b, const char* what) {
  if (!b.is_paired()) fail(ErrorCode::UnpairedRoots, std::string(what) + " needs a paired (real) bundle; realify complex bundles first");
}

PowerSeries log1p_series(int degree) {
  auto s = PowerSeries::zero(degree);
  for (int k = 1; k <= degree; ++k) s[k] = Rational(k % 2 == 1 ? 1 : -1) / k;
  return s;
}

/// Even genus factor as a series in u = t^2: G(u) = g(sqrt u).
PowerSeries even_part_in_square(Genus genus, int half_degree) {
  const PowerSeries g = genus_series(genus, 2 * half_degree);
  auto s = PowerSeries::zero(half_degree);
  for (int k = 0; k <= half_degree; ++k) s[k] = g[2 * k];
  return s;
}

}  // namespace

RootBundle RootBundle::make(std::vector<LineSummand> s, BundleKind kind) {
  for (const auto& l : s)
    if (l.multiplicity == 0) fail(ErrorCode::InvalidArgument, "line summand with zero multiplicity");
  RootBundle b;
  b.summands = std::move(s);
  b.kind = kind;
  return b;
}

long RootBundle::rank() const {
  long r = 0;
  for (const auto& l : summands) r += l.multiplicity;
  return r;
}

RootBundle direct_sum(const RootBundle& a, const RootBundle& b) {
  if (a.kind != b.kind && !a.summands.empty() && !b.summands.empty())
    fail(ErrorCode::InvalidArgument, "direct sum of bundles of different kinds");
  RootBundle r = a.summands.empty() ? b : a;
  r.summands = a.summands;
  r.summands.insert(r.summands.end(), b.summands.begin(), b.summands.end());
  return r;
}

RootBundle realify(const RootBundle& complex_bundle) {
  if (complex_bundle.is_paired()) return complex_bundle;
  return RootBundle::paired(complex_bundle.summands);
}

RootBundle cpm_tangent(int m) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "negative dimension");
  return RootBundle::paired({{1, 0, m + 1}});
}

RootBundle gamma_minus_one_power(int k) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "negative power of gamma - 1");
  std::vector<LineSummand> s;
  for (int j = 0; j <= k; ++j) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
    long c = b.get_si();
    if ((k - j) % 2 == 1) c = -c;
    s.push_back({j, 0, c});
  }
  return RootBundle::complex(std::move(s));
}

PowerSeries genus_series(Genus genus, int degree) {
  return genus == Genus::AHat ? aroof_genus_series(degree) : l_genus_series(degree);
}

TruncPoly multiplicative_class(Genus genus, const RootBundle& bundle, int m) {
  require_paired(bundle, "multiplicative_class");
  const PowerSeries g = genus_series(genus, m);
  auto result = TruncPoly::constant(m, Rational(1));
  for (const auto& l : bundle.summands) result *= signed_power(compose(g, root_class(l.chernRoot, m)), l.multiplicity);
  return result;
}

TruncPoly chern_character(const RootBundle& bundle, int m) {
  TruncPoly result(m);
  for (const auto& l : bundle.summands) result += exp_x(m, Rational(l.chernRoot)) * Rational(l.multiplicity);
  return result;
}

TruncPolyT<LaurentPoly> chern_character_equivariant(const RootBundle& bundle, int m) {
  TruncPolyT<LaurentPoly> result(m);
  for (const auto& l : bundle.summands) {
    const TruncPoly e = exp_x(m, Rational(l.chernRoot));
    for (int k = 0; k <= m; ++k) result[k] += LaurentPoly::monomial(e[k] * l.multiplicity, l.weight);
  }
  return result;
}

TruncPoly euler_class(const RootBundle& bundle, int m) {
  require_paired(bundle, "euler_class");
  auto result = TruncPoly::constant(m, Rational(1));
  for (const auto& l : bundle.summands) {
    if (l.multiplicity < 0) fail(ErrorCode::InvalidArgument, "Euler class of a virtual bundle with negative part");
    result *= pow(root_class(l.chernRoot, m), l.multiplicity);
  }
  return result;
}

TruncPoly spinor_character(const RootBundle& w, int m) {
  require_paired(w, "spinor_character");
  auto result = TruncPoly::constant(m, Rational(1));
  for (const auto& l : w.summands) {
    const Rational half = Rational(l.chernRoot) / 2;
    result *= signed_power(exp_x(m, half) + exp_x(m, -half), l.multiplicity);
  }
  return result;
}

TruncPolyT<LaurentPoly> spinor_character_equivariant(const RootBundle& w, int m) {
  require_paired(w, "spinor_character");
  auto result = TruncPolyT<LaurentPoly>::constant(m, LaurentPoly(Rational(1)));
  for (const auto& l : w.summands) {
    if (l.weight % 2 != 0) fail(ErrorCode::OddHalfWeight, "weight " + std::to_string(l.weight) + " has no integral half");
    if (l.multiplicity < 0) fail(ErrorCode::InvalidArgument, "equivariant spinor character of a virtual bundle");
    const Rational half = Rational(l.chernRoot) / 2;
    const TruncPoly ep = exp_x(m, half);
    const TruncPoly em = exp_x(m, -half);
    TruncPolyT<LaurentPoly> f(m);
    for (int k = 0; k <= m; ++k)
      f[k] = LaurentPoly::monomial(ep[k], l.weight / 2) + LaurentPoly::monomial(em[k], -l.weight / 2);
    result *= pow(f, l.multiplicity);
  }
  return result;
}

CohomSeries twist_UV(const RootBundle& tm, const RootBundle& v, int m, int order) {
  require_paired(tm, "twist_UV tangent bundle");
  if (v.is_paired()) fail(ErrorCode::InvalidArgument, "twist_UV expects a complex V");
  const TruncPoly one = TruncPoly::constant(m, Rational(1));

  // Lambda_{-1}(V*) = prod (1 - e^{-v})
  TruncPoly lambda = one;
  for (const auto& l : v.summands) lambda *= signed_power(one - exp_x(m, Rational(-l.chernRoot)), l.multiplicity);
  auto s = CohomSeries::constant(order, lambda, TruncPoly(m));

  for (int n = 1; n <= order; ++n) {
    for (const auto& l : tm.summands) {
      for (int sign : {1, -1}) {
        const TruncPoly u = exp_x(m, Rational(sign * l.chernRoot));
        for (long i = 0; i < std::labs(l.multiplicity); ++i) {
          if (l.multiplicity > 0) {
            s.mul_binomial(n, one).div_binomial(n, u);
          } else {
            s.mul_binomial(n, u).div_binomial(n, one);
          }
        }
      }
    }
    for (const auto& l : v.summands) {
      for (int sign : {1, -1}) {
        const TruncPoly u = exp_x(m, Rational(sign * l.chernRoot));
        for (long i = 0; i < std::labs(l.multiplicity); ++i) {
          if (l.multiplicity > 0) {
            s.mul_binomial(n, u).div_binomial(n, one);
          } else {
            s.mul_binomial(n, one).div_binomial(n, u);
          }
        }
      }
    }
  }
  return s;
}

CohomSeries twist_UVW(const RootBundle& tm, const RootBundle& v, const RootBundle& w, int m, int order) {
  require_paired(w, "twist_UVW spinor bundle");
  CohomSeries s = twist_UV(tm, v, m, order);
  const TruncPoly one = TruncPoly::constant(m, Rational(1));
  const TruncPoly minus_one = TruncPoly::constant(m, Rational(-1));
  // Delta(W~) = Delta(W) / 2^{t}
  s *= spinor_character(w, m) * pow(Rational(2), -w.rank());
  for (int n = 1; n <= order; ++n) {
    for (const auto& l : w.summands) {
      for (int sign : {1, -1}) {
        // (1 + q^n u) / (1 + q^n)
        const TruncPoly minus_u = -exp_x(m, Rational(sign * l.chernRoot));
        for (long i = 0; i < std::labs(l.multiplicity); ++i) {
          if (l.multiplicity > 0) {
            s.mul_binomial(n, minus_u).div_binomial(n, minus_one);
          } else {
            s.mul_binomial(n, minus_one).div_binomial(n, minus_u);
          }
        }
      }
    }
  }
  return s;
}

PontrjaginCandidate PontrjaginCandidate::standard(int m) {
  PontrjaginCandidate c;
  c.m = m;
  for (int j = 1; 2 * j <= m; ++j) c.p.push_back(binomial(m + 1, j));
  return c;
}

TruncPoly PontrjaginCandidate::total_class() const {
  auto t = TruncPoly::constant(m, Rational(1));
  for (std::size_t j = 1; j <= p.size(); ++j) t[2 * static_cast<int>(j)] = p[j - 1];
  return t;
}

TruncPoly log_unipotent(const TruncPoly& a) {
  if (a.constant_term() != 1) fail(ErrorCode::InvalidArgument, "log needs constant term 1");
  return compose(log1p_series(a.m()), a - TruncPoly::constant(a.m(), Rational(1)));
}

TruncPoly class_from_pontrjagin(Genus genus, const PontrjaginCandidate& cand) {
  const int m = cand.m;
  const int h = m / 2;
  if (static_cast<int>(cand.p.size()) != h) fail(ErrorCode::InvalidArgument, "Pontrjagin candidate needs floor(m/2) entries");
  const PowerSeries logG = log(even_part_in_square(genus, h));
  // Newton: power sums of the squared roots from the elementary ones.
  std::vector<Rational> pi(h + 1);
  for (int k = 1; k <= h; ++k) {
    Rational acc = (k % 2 == 1 ? 1 : -1) * Rational(k) * cand.p[k - 1];
    for (int i = 1; i < k; ++i) acc += (i % 2 == 1 ? 1 : -1) * cand.p[i - 1] * pi[k - i];
    pi[k] = acc;
  }
  TruncPoly logK(m);
  for (int k = 1; k <= h; ++k) logK[2 * k] = logG[k] * pi[k];
  return exp_nilpotent(logK);
}

PontrjaginCandidate pontrjagin_from_class(Genus genus, const TruncPoly& cls) {
  const int m = cls.m();
  const int h = m / 2;
  for (int k = 1; k <= m; k += 2)
    if (!is_zero(cls[k])) fail(ErrorCode::InvalidArgument, "multiplicative class with an odd-degree component");
  const PowerSeries logG = log(even_part_in_square(genus, h));
  const TruncPoly logK = log_unipotent(cls);
  std::vector<Rational> pi(h + 1);
  for (int k = 1; k <= h; ++k) pi[k] = logK[2 * k] / logG[k];
  // Newton inverse: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} pi_i
  std::vector<Rational> e(h + 1);
  e[0] = 1;
  for (int k = 1; k <= h; ++k) {
    Rational acc;
    for (int i = 1; i <= k; ++i) acc += (i % 2 == 1 ? 1 : -1) * e[k - i] * pi[i];
    e[k] = acc / k;
  }
  PontrjaginCandidate out;
  out.m = m;
  out.p.assign(e.begin() + 1, e.end());
  return out;
}

}  // namespace cprig
