#include <random>

#include "cprig/global_index.hpp"
#include "doctest.h"

using namespace cprig;

namespace {

// Naive oracle: (x/(1-e^{-x}))^{m+1} e^{(c-(m+1))x/2} ch(V), coefficient of x^m,
// built from explicit Taylor coefficients without the library's genus code.
Rational naive_index(int m, long c1, const std::vector<std::pair<long, long>>& lines) {
  std::vector<Rational> f(m + 1);  // (1 - e^{-x})/x
  Rational fact = 1;
  for (int k = 0; k <= m; ++k) {
    fact *= (k + 1);
    f[k] = Rational((k % 2 == 0) ? 1 : -1) / fact;
  }
  std::vector<Rational> g(m + 1);  // 1/f
  g[0] = 1;
  for (int n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += f[k] * g[n - k];
    g[n] = -acc;
  }
  auto mul = [m](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(m + 1);
    for (int i = 0; i <= m; ++i)
      for (int j = 0; i + j <= m; ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  auto expo = [m](const Rational& s) {
    std::vector<Rational> e(m + 1);
    Rational term = 1;
    for (int k = 0; k <= m; ++k) {
      e[k] = term;
      term = term * s / (k + 1);
    }
    return e;
  };
  std::vector<Rational> prod(m + 1);
  prod[0] = 1;
  for (int i = 0; i <= m; ++i) prod = mul(prod, g);
  prod = mul(prod, expo(Rational(c1 - (m + 1)) / 2));
  std::vector<Rational> ch(m + 1);
  for (auto [c, mult] : lines) {
    auto e = expo(Rational(c));
    for (int k = 0; k <= m; ++k) ch[k] += e[k] * mult;
  }
  return mul(prod, ch)[m];
}

}  // namespace

TEST_CASE("Todd genus and simple indices") {
  for (int m = 1; m <= 8; ++m) CHECK(index_twisted(SpincData::standard(m), RootBundle::complex({{0, 0, 1}})) == 1);
  CHECK(index_twisted(SpincData::make(2, 3), RootBundle::complex({{0, 0, 1}})) == 1);
  CHECK(index_twisted(SpincData::make(3, 2), RootBundle::complex({{1, 0, 1}, {1, 0, -1}})) == 0);
  CHECK_THROWS_AS(SpincData::make(2, 2), Error);
}

TEST_CASE("index_twisted matches a naive oracle and is additive (seeded)") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> md(1, 7), cd(-3, 3), mult(-2, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = md(rng);
    const long c1 = 2 * cd(rng) + (m + 1) % 2;
    std::vector<std::pair<long, long>> lines;
    std::vector<LineSummand> a, b;
    for (int i = 0; i < 3; ++i) {
      long c = cd(rng), k = mult(rng);
      if (k == 0) k = 1;
      lines.push_back({c, k});
      (i % 2 == 0 ? a : b).push_back({c, 0, k});
    }
    const auto spinc = SpincData::make(m, c1);
    const auto ia = index_twisted(spinc, RootBundle::complex(a));
    const auto ib = index_twisted(spinc, RootBundle::complex(b));
    CHECK(ia + ib == naive_index(m, c1, lines));
    CHECK(index_twisted(spinc, direct_sum(RootBundle::complex(a), RootBundle::complex(b))) == ia + ib);
  }
}

TEST_CASE("index_series of the unit twist is constant") {
  const auto spinc = SpincData::standard(3);
  auto one = CohomSeries::constant(4, TruncPoly::constant(3, Rational(1)), TruncPoly(3));
  auto s = index_series(spinc, one);
  CHECK(s[0] == 1);
  for (int n = 1; n <= 4; ++n) CHECK(s[n] == 0);
}

TEST_CASE("mod 24 examples") {
  CHECK(mod24_q(4) == Rational(149, 24));
  CHECK(is_integer(mod24_index(4, 5)));
  CHECK_FALSE(is_integer(mod24_index(4, 6)));
  CHECK(is_integer(mod24_index(4, 29)));
  CHECK_THROWS_AS(mod24_index(2, 3), Error);
  auto r = mod24_check(4, 0, 48);
  CHECK(r.passed());
  CHECK(r.value["integralResiduesMod24"] == Json::array({5}));
  CHECK(r.value["rows"].size() == 49);
}

TEST_CASE("mod 24 verdict depends only on b mod 24") {
  for (int m = 3; m <= 7; ++m)
    for (long b = -72; b <= 0; ++b) CHECK(is_integer(mod24_index(m, b)) == is_integer(mod24_index(m, b + 24)));
}

TEST_CASE("rigidity relations on CP^m") {
  for (int m = 3; m <= 10; ++m) {
    auto rel = rigidity_relations(m, standard_aroof(m));
    CHECK(rel.size() == static_cast<std::size_t>((m - 1) / 2));
    for (const auto& r : rel) CHECK(r == 0);
    CHECK(rigidity_report(m).passed());
  }
}

TEST_CASE("rigidity relations are linear in Ahat (seeded)") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> d(-5, 5);
  const int m = 7;
  for (int trial = 0; trial < 10; ++trial) {
    TruncPoly p(m), q(m);
    for (int k = 2; k <= m; k += 2) {
      p[k] = d(rng);
      q[k] = make_rational(d(rng), 3);
    }
    const auto a = standard_aroof(m);
    auto r0 = rigidity_relations(m, a);
    auto rp = rigidity_relations(m, a + p);
    auto rq = rigidity_relations(m, a + q);
    auto rpq = rigidity_relations(m, a + p + q);
    for (std::size_t i = 0; i < r0.size(); ++i) CHECK(rpq[i] - r0[i] == (rp[i] - r0[i]) + (rq[i] - r0[i]));
  }
}

TEST_CASE("q^0 of the spinor twist is the rigidity integrand over 2^{2k}") {
  for (int m = 3; m <= 8; ++m) {
    for (int k = 0; 2 * k <= m - 3; ++k) {
      std::vector<LineSummand> vs{{2, 0, 1}}, ws;
      if (m - 3 - 2 * k > 0) vs.push_back({1, 0, m - 3 - 2 * k});
      if (k > 0) ws.push_back({1, 0, 2 * k});
      auto v = RootBundle::complex(vs);
      auto w = RootBundle::spin(ws);
      auto series = twist_UVW(cpm_tangent(m), v, w, m, 0);
      const auto spinc = SpincData::make(m, m - 1 - 2 * k);
      auto idx = index_series(spinc, series);
      const auto a = standard_aroof(m);
      const auto rel = rigidity_relations(m, a);
      CHECK(idx[0] * pow(Rational(2), 2 * k) == rel[k]);
      // and on a perturbed Ahat as well
      const TruncPoly bumped = a + TruncPoly::x_power(m, 2);
      CHECK(index_series(spinc, bumped, series)[0] * pow(Rational(2), 2 * k) == rigidity_relations(m, bumped)[k]);
    }
  }
}

TEST_CASE("Pontrjagin reconstruction") {
  auto r4 = reconstruct_pontrjagin(4);
  CHECK(r4.p.p == std::vector<Rational>{5, 10});
  CHECK(r4.residualAfterSignature == 0);
  CHECK(r4.residualAfterRelations == 1);
  auto r6 = reconstruct_pontrjagin(6);
  CHECK(r6.p.p == std::vector<Rational>{7, 21, 35});
  for (int m : {5, 7, 9}) {
    auto r = reconstruct_pontrjagin(m);
    CHECK(r.residualAfterRelations == 0);
    CHECK(r.p == PontrjaginCandidate::standard(m));
  }
  for (int m = 3; m <= 10; ++m) {
    auto r = reconstruct_pontrjagin(m);
    for (const auto& v : rigidity_relations(m, r.aroof)) CHECK(v == 0);
  }
}

TEST_CASE("report serialisation") {
  auto r = rigidity_report(5);
  auto j = r.to_json();
  CHECK(j["check"] == "rigidity");
  CHECK(j["status"] == "pass");
  CHECK(to_json(Rational(-3, 4)) == Json{{"num", "-3"}, {"den", "4"}});
  CHECK_THROWS_AS(make_report("x", false, Json::object(), nullptr, nullptr), Error);
}
