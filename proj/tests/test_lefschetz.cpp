#include <random>

#include "cprig/lefschetz.hpp"
#include "doctest.h"

using namespace cprig;

namespace {

std::vector<long> normal_weights(const FixedComponent& y) {
  std::vector<long> w;
  for (const auto& l : y.normal) w.push_back(l.weight);
  return w;
}

FixedComponent isolated(std::vector<long> doubledWeights) {
  FixedComponent y;
  for (long w : doubledWeights) y.normal.push_back({1, w, 1});
  return y;
}

RootBundle no_V() { return RootBundle::complex({}); }

}  // namespace

TEST_CASE("linear model weight tables") {
  auto cp1 = linear_model({1, {0, 1}});
  CHECK(normal_weights(cp1.components[0]) == std::vector<long>{2});
  CHECK(normal_weights(cp1.components[1]) == std::vector<long>{-2});
  auto cp2 = linear_model({2, {0, 1, 2}});
  CHECK(normal_weights(cp2.components[0]) == std::vector<long>{2, 4});
  CHECK(normal_weights(cp2.components[1]) == std::vector<long>{-2, 2});
  CHECK(normal_weights(cp2.components[2]) == std::vector<long>{-4, -2});
  CHECK(cp2.n == -3);
  auto sym = linear_model({2, {0, 1, -1}});
  std::vector<long> g;
  for (const auto& y : sym.components) g.push_back(y.gammaWeight);
  CHECK(g == std::vector<long>{0, -2, 2});
  CHECK_THROWS_AS(linear_model({2, {0, 1, 1}}), Error);
  CHECK_THROWS_AS(linear_model({2, {0, 1, 3}}, GammaLift::Balanced), Error);
}

TEST_CASE("star invariant") {
  auto r = star_invariant(linear_model({2, {0, 1, -1}}));
  CHECK(r.passed());
  CHECK(r.value["C"] == Json::array({8, 8, 8}));
  auto bad = star_invariant(linear_model({2, {0, 1, 2}}));
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.witness.is_null());
  CHECK(star_invariant(linear_model({2, {0, 1, 2}}, GammaLift::Balanced)).passed());
  FixedPointData single;
  single.m = 1;
  FixedComponent y;
  y.dY = 1;
  y.tangentRoots.push_back({1, 0, 2});
  single.components.push_back(y);
  CHECK(star_invariant(single).passed());
}

TEST_CASE("isolated local term at q^0") {
  const auto spinc = SpincData::make(1, 0);
  for (long w : {2, 4, -6}) {
    auto t = local_term(isolated({w}), spinc, 0).reduced();
    const long h = w / 2;
    auto expect = rf_reduce(LaurentPoly(1), LaurentPoly::monomial(Rational(1), h) - LaurentPoly::monomial(Rational(1), -h));
    CHECK(t[0] == expect);
  }
}

TEST_CASE("local term is odd in the normal weights") {
  const auto spinc = SpincData::make(2, 1);
  for (auto ws : std::vector<std::vector<long>>{{2, 4}, {-2, 6}, {4, -4}}) {
    std::vector<long> flipped;
    for (long w : ws) flipped.push_back(-w);
    auto a = local_term(isolated(ws), spinc, 3).reduced();
    auto b = local_term(isolated(flipped), spinc, 3).reduced();
    for (int n = 0; n <= 3; ++n) CHECK(a[n] == b[n]);  // (-1)^2
  }
  auto a = local_term(isolated({2, 4, 6}), SpincData::make(3, 0), 2).reduced();
  auto b = local_term(isolated({-2, -4, -6}), SpincData::make(3, 0), 2).reduced();
  for (int n = 0; n <= 2; ++n) CHECK(a[n] == -b[n]);
}

TEST_CASE("Lefschetz sum on CP^1 and CP^2") {
  auto r1 = lefschetz_sum(linear_model({1, {0, 1}}), SpincData::make(1, 2), no_V(), 0);
  CHECK(r1.report.passed());
  CHECK(r1.sum[0].is_laurent_polynomial());
  CHECK(r1.sum[0].num().eval(Rational(1)) == 1);
  auto r2 = lefschetz_sum(linear_model({2, {0, 1, -1}}), SpincData::make(2, 3), no_V(), 4);
  CHECK(r2.report.passed());
  CHECK(r2.sum[0].num() == LaurentPoly(1));
  CHECK(r2.expected[1] == 3);
}

TEST_CASE("vanishing when V has too many fixed directions") {
  auto data = linear_model({3, {0, 1, -1, 2}});
  std::vector<LineSummand> s;
  for (const auto& y : data.components) s.push_back({1, -y.gammaWeight, 1});
  const auto v = RootBundle::complex(s);
  const auto withV = assign_V(data, v);
  const auto spinc = SpincData::make(3, 2);
  for (const auto& y : withV.components) {
    CHECK(fixed_rank(y.VRoots) > y.dY);
    CHECK(local_term(y, spinc, 3).is_zero());
  }
  auto r = lefschetz_sum(data, spinc, v, 3);
  CHECK(r.report.passed());
  for (int n = 0; n <= 3; ++n) CHECK(r.expected[n] == 0);
}

TEST_CASE("V with prescribed fixed ranks") {
  auto data = linear_model({2, {0, 1, 2}});
  auto sv = build_fixed_rank_V(data);
  CHECK(sv.fixedRanks == std::vector<long>{0, 1, 1});
  CHECK(sv.V.summands == std::vector<LineSummand>{{1, 2, 1}, {1, 4, 1}});
  const auto withV = assign_V(data, sv.V);
  CHECK(jacobi_index_IY(withV.components[0]) == 0);
  const auto spinc = SpincData::standard(2);
  CHECK(local_term(withV.components[1], spinc, 2).is_zero());
  CHECK(local_term(withV.components[2], spinc, 2).is_zero());
  auto r = lefschetz_sum(data, spinc, sv.V, 3);
  CHECK(r.report.passed());
  bool nonzero = false;
  for (int n = 0; n <= 3; ++n) nonzero = nonzero || r.expected[n] != 0;
  CHECK(nonzero);
  CHECK_THROWS_AS(build_fixed_rank_V(linear_model({2, {0, 1, 2}}, GammaLift::Balanced)), Error);
}

TEST_CASE("jacobi index bookkeeping") {
  auto y = isolated({2, -4});
  y.VRoots = {{1, 2, 1}, {1, -4, 1}};
  CHECK(jacobi_index_IY(y) == 0);
  y.VRoots.clear();
  CHECK_THROWS_AS(jacobi_index_IY(y), Error);  // -5/2
  CHECK(jacobi_index_IY(isolated({2, -2, 4, 4})) == -5);
}

TEST_CASE("random linear models cancel their poles (seeded)") {
  std::mt19937_64 rng(314159);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    std::vector<long> a{0};
    while (static_cast<int>(a.size()) < m + 1) {
      const long v = static_cast<long>(rng() % 9) - 4;
      if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
    }
    const long c1 = (m + 1) + 2 * (static_cast<long>(rng() % 3) - 1);
    std::vector<LineSummand> v;
    if (rng() % 2) v.push_back({1, 2 * (static_cast<long>(rng() % 5) - 2), 1});
    if (rng() % 2) v.push_back({2, 0, 1});
    auto r = lefschetz_sum(linear_model({m, a}), SpincData::make(m, c1), RootBundle::complex(v), 3);
    CHECK_MESSAGE(r.report.passed(), r.report.to_json().dump());
  }
}

TEST_CASE("extended fixed components (experimental)") {
  for (auto a : std::vector<std::vector<long>>{{0, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 2}, {1, 0, 0, -1, 1}}) {
    const int m = static_cast<int>(a.size()) - 1;
    auto data = linear_model_extended({m, a});
    auto r = lefschetz_sum(data, SpincData::standard(m), RootBundle::complex({{1, 2, 1}}), 2);
    CHECK_MESSAGE(r.report.passed(), r.report.to_json().dump());
    auto r2 = lefschetz_sum(data, SpincData::make(m, m - 1), no_V(), 2);
    CHECK_MESSAGE(r2.report.passed(), r2.report.to_json().dump());
  }
}

TEST_CASE("synthetic star data and the Petrie chain") {
  for (int m = 3; m <= 5; ++m) {
    for (long n = 0; n <= m + 2; ++n) {
      auto data = synthetic_star(m, n, 1000 + 7 * m + n);
      CHECK(star_invariant(data).passed());
      auto r = petrie_bound_report(data);
      CHECK(r.passed());
      CHECK(r.value["starHolds"] == true);
      if (n >= m) CHECK(r.value["IY0"]["num"].get<std::string>()[0] == '-');
    }
  }
  auto n0 = petrie_bound_report(synthetic_star(4, 0, 5));
  CHECK(n0.passed());
  auto lin = petrie_bound_report(linear_model({3, {0, 1, 2, -1}}));
  CHECK(lin.value["hypothesisNNonNegative"] == false);
}

TEST_CASE("synthetic data is reproducible") {
  auto a = synthetic_star(4, 2, 77), b = synthetic_star(4, 2, 77);
  for (std::size_t i = 0; i < a.components.size(); ++i) CHECK(a.components[i].normal == b.components[i].normal);
}
