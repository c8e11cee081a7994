#include <random>

#include "cprig/jacobi.hpp"
#include "cprig/lefschetz.hpp"
#include "doctest.h"

using namespace cprig;

namespace {

std::vector<ModularPoint> sample_points(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.5, 1.5), zr(-1.0, 1.0), zi(-0.3, 0.3);
  std::vector<ModularPoint> out;
  for (int i = 0; i < count; ++i) out.push_back(ModularPoint::make({re(rng), im(rng)}, {zr(rng), zi(rng)}));
  return out;
}

}  // namespace

TEST_CASE("phi basics") {
  NumericPolicy pol;
  CHECK(std::abs(phi_eval(ModularPoint::make({0, 1}, 0), pol)) == 0);
  for (const auto& p : sample_points(11, 10)) {
    const Complex a = phi_eval(p, pol);
    CHECK(relative_residual(phi_eval({p.tau, -p.z}, pol), -a) < 1e-9);
    CHECK(relative_residual(phi_eval({p.tau, p.z + 1.0}, pol), -a) < 1e-9);
  }
  CHECK_THROWS_AS(ModularPoint::make({0, -1}, 0), Error);
  NumericPolicy tight;
  tight.maxProductTerms = 2;
  CHECK_THROWS_AS(phi_eval(ModularPoint::make({0, 0.5}, 0.3), tight), Error);
}

TEST_CASE("truncation bound decreases with Im tau") {
  NumericPolicy pol;
  auto a = choose_truncation({0, 0.5}, 0.2, pol);
  auto b = choose_truncation({0, 2.0}, 0.2, pol);
  CHECK(a.terms > b.terms);
  CHECK(a.tailBound <= pol.tolerance / 10);
}

TEST_CASE("lattice shifts") {
  NumericPolicy pol;
  CHECK(lattice_shift_check(ModularPoint::make({0, 1}, 0.3), 0, 0, pol).value["residual"] == 0.0);
  CHECK(lattice_shift_check(ModularPoint::make({0, 1}, 0.3), 1, 0, pol).passed());
  for (const auto& p : sample_points(5, 5))
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b) CHECK(lattice_shift_check(p, a, b, pol).passed());
}

TEST_CASE("modular transformations") {
  NumericPolicy pol;
  CHECK(modular_check(ModularPoint::make({0, 2}, 0.2), SL2Z{}, pol).value["residual"] == 0.0);
  CHECK(modular_check(ModularPoint::make({0, 2}, 0.2), SL2Z::S(), pol).passed());
  for (const auto& p : sample_points(8, 6)) {
    CHECK(modular_check(p, SL2Z::S(), pol).passed());
    CHECK(modular_check(p, SL2Z::T(), pol).passed());
    CHECK(modular_check(p, SL2Z::T() * SL2Z::S(), pol).passed());
  }
  CHECK_THROWS_AS(modular_check(ModularPoint::make({0, 1}, 0.1), SL2Z{1, 1, 1, 1}, pol), Error);
}

TEST_CASE("F_Y values and index law") {
  NumericPolicy pol;
  auto p = ModularPoint::make({0.1, 1.0}, {0.23, 0.05});
  CHECK(std::abs(FY_eval({2, -4}, {2, -4}, p, pol) - 1.0) < 1e-12);
  CHECK_THROWS_AS(FY_eval({2}, {}, ModularPoint::make({0, 1}, 0.5), pol), Error);
  for (const auto& q : sample_points(3, 4)) {
    auto r = fy_index_law_check({2, 4, -2}, {4, 2}, q, 1, -1, pol);
    CHECK(r.passed());
    CHECK(r.value["index"] == (16 + 4 - 4 - 16 - 4) / 2);
  }
}

TEST_CASE("fixed-rank V gives finite F on the real line") {
  NumericPolicy pol;
  auto data = linear_model({2, {0, 1, 2}});
  auto sv = build_fixed_rank_V(data);
  auto y0 = assign_V(data, sv.V).components[0];
  std::vector<long> m, s;
  for (const auto& l : y0.normal) m.push_back(l.weight);
  for (const auto& l : y0.VRoots) s.push_back(l.weight);
  CHECK(4 * jacobi_index_IY(y0) == fy_index(m, s));
  for (int k = 0; k < 50; ++k) {
    const double z = (k + 0.618) / 50;
    CHECK(std::isfinite(std::abs(FY_eval(m, s, ModularPoint::make({0, 1}, z), pol))));
  }
}

TEST_CASE("exact phi series agrees with the product") {
  NumericPolicy pol;
  for (const auto& p : sample_points(21, 10)) CHECK(phi_series_cross_check(p, 8, pol).passed());
}

TEST_CASE("real-line scan on CP^1 matches the exact sum") {
  NumericPolicy pol;
  auto data = linear_model({1, {0, 1}});
  auto r = real_line_pole_scan(data, SpincData::make(1, 2), {0, 1}, 101, pol, 0.05, 6);
  CHECK_MESSAGE(r.report.passed(), r.report.to_json().dump());
  CHECK(r.samples.size() == 101);
  CHECK(scan_csv(r.samples).rfind("z,re,im,abs\n", 0) == 0);
  // a single isolated term alone blows up near its pole at z = 1/2
  CHECK_THROWS_AS(FY_eval({2}, {}, ModularPoint::make({0, 1}, 0.5 + 1e-9), pol), Error);
  CHECK(std::abs(FY_eval({2}, {}, ModularPoint::make({0, 1}, 0.5 + 1e-5), pol)) > 1e3);
  auto r2 = real_line_pole_scan(linear_model({2, {0, 1, -1}}), SpincData::make(2, 3), {0.1, 0.9}, 101, pol, 0.05, 6);
  CHECK_MESSAGE(r2.report.passed(), r2.report.to_json().dump());
}
