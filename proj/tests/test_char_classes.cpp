#include <random>

#include "cprig/char_classes.hpp"
#include "doctest.h"

using namespace cprig;

TEST_CASE("Ahat and L of CP^2") {
  CHECK(pair_fundamental(multiplicative_class(Genus::AHat, cpm_tangent(2), 2)) == Rational(-1, 8));
  CHECK(pair_fundamental(multiplicative_class(Genus::L, cpm_tangent(2), 2)) == 1);
  // signature of CP^4 is 1 as well
  CHECK(pair_fundamental(multiplicative_class(Genus::L, cpm_tangent(4), 4)) == 1);
}

TEST_CASE("Todd genus of CP^m is one") {
  for (int m = 1; m <= 7; ++m) {
    auto td = multiplicative_class(Genus::AHat, cpm_tangent(m), m) * exp_x(m, make_rational(m + 1, 2));
    CHECK(pair_fundamental(td) == 1);
  }
}

TEST_CASE("virtual summands cancel") {
  auto b = RootBundle::paired({{2, 0, 3}, {2, 0, -3}});
  CHECK(multiplicative_class(Genus::AHat, b, 5) == TruncPoly::constant(5, Rational(1)));
  CHECK_THROWS_AS(RootBundle::paired({{1, 0, 0}}), Error);
  CHECK_THROWS_AS(multiplicative_class(Genus::L, RootBundle::complex({{1, 0, 1}}), 3), Error);
}

TEST_CASE("chern character of (gamma-1)^k is (e^x-1)^k") {
  for (int k = 0; k <= 4; ++k) {
    const int m = 6;
    auto expect = pow(exp_x(m, Rational(1)) - TruncPoly::constant(m, Rational(1)), k);
    CHECK(chern_character(gamma_minus_one_power(k), m) == expect);
  }
}

TEST_CASE("euler class of CP^m stable tangent") {
  CHECK(pair_fundamental(euler_class(cpm_tangent(3), 3)) == 0);  // x^4 vanishes in degree 3
  CHECK(euler_class(RootBundle::paired({{1, 0, 1}, {-2, 0, 1}}), 2) == TruncPoly::monomial(2, Rational(-2), 2));
}

TEST_CASE("equivariant characters restrict to the plain ones at lambda=1") {
  auto v = RootBundle::complex({{1, 2, 1}, {-1, -4, 2}, {0, 6, -1}});
  auto eq = chern_character_equivariant(v, 3);
  auto plain = chern_character(v, 3);
  for (int k = 0; k <= 3; ++k) CHECK(eq[k].eval(Rational(1)) == plain[k]);
  auto w = RootBundle::spin({{1, 2, 2}, {3, -6, 1}});
  auto seq = spinor_character_equivariant(w, 4);
  auto splain = spinor_character(w, 4);
  for (int k = 0; k <= 4; ++k) CHECK(seq[k].eval(Rational(1)) == splain[k]);
  CHECK_THROWS_AS(spinor_character_equivariant(RootBundle::spin({{1, 3, 1}}), 2), Error);
}

TEST_CASE("Pontrjagin round trip (seeded)") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int m = 2; m <= 10; ++m) {
    for (Genus g : {Genus::AHat, Genus::L}) {
      PontrjaginCandidate c;
      c.m = m;
      for (int j = 0; j < m / 2; ++j) c.p.push_back(make_rational(d(rng), 1 + (d(rng) + 9) % 4));
      CHECK(pontrjagin_from_class(g, class_from_pontrjagin(g, c)) == c);
    }
    // standard data reproduces the splitting-principle class
    CHECK(class_from_pontrjagin(Genus::AHat, PontrjaginCandidate::standard(m)) ==
          multiplicative_class(Genus::AHat, cpm_tangent(m), m));
  }
}

TEST_CASE("twist series has the index-zero constant term and a sensible q^1 term") {
  // q^0 coefficient is Lambda_{-1}(V*); with V = 0 it is 1.
  auto s = twist_UV(cpm_tangent(2), RootBundle::complex({}), 2, 2);
  CHECK(s[0] == TruncPoly::constant(2, Rational(1)));
  // q^1 coefficient: T~M (x) C = 3(e^x + e^-x) - 6 in the stable model.
  auto e = exp_x(2, Rational(1)) + exp_x(2, Rational(-1)) - TruncPoly::constant(2, Rational(2));
  CHECK(s[1] == e * Rational(3));
  auto w = twist_UVW(cpm_tangent(2), RootBundle::complex({}), RootBundle::spin({{1, 0, 1}}), 2, 1);
  // Delta(W)/2 = cosh(x/2) = 1 + x^2/8
  CHECK(w[0] == TruncPoly(2, {1, 0, Rational(1, 8)}));
}
