#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "cprig/error.hpp"
#include "cprig/fixtures.hpp"
#include "cprig/lefschetz.hpp"
#include "cprig/run.hpp"
#include "doctest.h"

using namespace cprig;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::CheckFailed;
}

// classes counted through gap sequences g_1..g_m > 0: a translate has
// sum (m+1)t + sum_i (m+1-i) g_i, and negation reverses the gaps
long count_classes(int m, long maxWeight) {
  std::set<std::vector<long>> seen;
  long count = 0;
  std::vector<long> g(m, 1);
  while (true) {
    long span = 0, weighted = 0;
    for (int i = 0; i < m; ++i) {
      span += g[i];
      weighted += (m - i) * g[i];
    }
    if (span <= 2 * maxWeight && weighted % (m + 1) == 0) {
      std::vector<long> r(g.rbegin(), g.rend());
      if (!seen.count(g) && !seen.count(r)) ++count;
      seen.insert(g);
    }
    int k = m - 1;
    while (k >= 0 && g[k] == 2 * maxWeight) g[k--] = 1;
    if (k < 0) break;
    ++g[k];
  }
  return count;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("cprig_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("admissible linear weights match the gap count") {
  CHECK(admissible_linear_weights(2, 3).size() == 4);
  for (int m = 1; m <= 5; ++m)
    for (long w = (m + 1) / 2; w <= 4; ++w) {
      const auto sets = admissible_linear_weights(m, w);
      CHECK(static_cast<long>(sets.size()) == count_classes(m, w));
      for (const auto& a : sets) {
        long s = 0;
        for (long v : a) {
          CHECK(std::labs(v) <= w);
          s += v;
        }
        CHECK(s % (m + 1) == 0);
        CHECK(std::is_sorted(a.begin(), a.end()));
      }
    }
  CHECK(code_of([] { admissible_linear_weights(4, 1); }) == ErrorCode::InfeasibleParams);
}

TEST_CASE("fixture JSON round trip") {
  const Json lin = Json::parse(R"({"m":3,"ambientWeights":[0,1,-1,2],"spincC1":2,"qOrder":3,
                                   "V":[{"gammaPower":1,"weight":-1}]})");
  const Fixture f = parse_fixture(lin);
  CHECK(f.data.components.size() == 4);
  CHECK(f.data.components[1].normal[0].weight == -2);  // doubled
  CHECK(f.V.summands == std::vector<LineSummand>{{1, -2, 1}});
  CHECK(f.spinc.c1 == 2);
  const Fixture back = parse_fixture(fixture_json(f));
  CHECK(fixture_json(back) == fixture_json(f));

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto gen = generate_fixtures(FixtureFamily::SyntheticStar, {4, 0, 2L, seed, 4});
    REQUIRE(gen.size() == 1);
    const Fixture again = parse_fixture(fixture_json(gen[0]));
    REQUIRE(again.data.components.size() == gen[0].data.components.size());
    for (std::size_t i = 0; i < again.data.components.size(); ++i) {
      CHECK(again.data.components[i].normal == gen[0].data.components[i].normal);
      CHECK(again.data.components[i].gammaWeight == gen[0].data.components[i].gammaWeight);
    }
    CHECK(star_invariant(again.data).passed());
  }

  auto ext = parse_fixture(Json::parse(R"({"m":3,"ambientWeights":[0,0,1,2],"extended":true})"));
  CHECK(ext.data.components[0].dY == 1);
  CHECK(fixture_json(parse_fixture(fixture_json(ext))) == fixture_json(ext));
}

TEST_CASE("fixture errors are parse errors") {
  for (const char* text : {
           R"({"m":2,"ambientWeights":[0,1,1]})",             // duplicate weights
           R"({"m":2,"ambientWeights":[0,1]})",               // wrong count
           R"({"m":2,"ambientWeights":[0,1,2],"spincC1":2})", // parity
           R"({"m":2,"ambientWeights":[0,1,2],"n":4})",
           R"({"m":2,"ambientWeights":[0,1,2],"color":1})",
           R"({"m":1,"components":[{"normalWeights":[1],"gammaWeight":0},{"normalWeights":[0],"gammaWeight":1}],"n":0})",
           R"({"m":1,"components":[{"normalWeights":[1],"gammaWeight":0}],"n":0})",
           R"({"m":"two","ambientWeights":[0,1,2]})",
       }) {
    CHECK(code_of([&] { parse_fixture(Json::parse(text)); }) == ErrorCode::FixtureParseError);
  }
  CHECK(code_of([] { load_fixture("/nonexistent/fixture.json"); }) == ErrorCode::FixtureParseError);
  const auto broken = temp_file("broken.json", "{\"m\": 2,");
  CHECK(code_of([&] { load_fixture(broken); }) == ErrorCode::FixtureParseError);
}

TEST_CASE("generated families satisfy their contracts") {
  for (const auto& f : generate_fixtures(FixtureFamily::Linear, {3, 3, {}, 1, 4})) {
    CHECK(f.lift == GammaLift::Balanced);
    CHECK(star_invariant(f.data).passed());
  }
  for (int m = 3; m <= 5; ++m) {
    auto edge = generate_fixtures(FixtureFamily::PetrieEdge, {m, 0, {}, 5, 4});
    REQUIRE(edge.size() == 1);
    CHECK(edge[0].data.n == m);
    const auto r = petrie_bound_report(edge[0].data);
    CHECK(r.passed());
    CHECK(r.value["IY0"]["num"].get<std::string>().front() == '-');
  }
  CHECK(code_of([] { generate_fixtures(FixtureFamily::SyntheticStar, {3, 0, {}, 1, 4}); }) == ErrorCode::InfeasibleParams);
}

TEST_CASE("run: exit codes and determinism") {
  RunConfig c;
  c.command = Command::Mod24;
  c.m = 4;
  c.bRange = parse_range("0..48");
  auto r = run(c);
  CHECK(r.exitCode == 0);
  CHECK(r.report["reports"][0]["value"]["integralB"] == Json{5, 29});
  CHECK(r.report["reports"][0]["params"]["seed"] == 1);

  c.command = Command::Star;
  c.bRange.reset();
  c.m.reset();
  c.fixturePath = temp_file("dup.json", R"({"m":2,"ambientWeights":[0,2,2]})");
  r = run(c);
  CHECK(r.exitCode == 2);
  CHECK(r.report["error"]["code"] == "FixtureParseError");

  // naive lift with sum not divisible by m+1 breaks the star identity
  c.fixturePath = temp_file("unnormalized.json", R"({"m":2,"ambientWeights":[0,1,3],"n":-3})");
  auto data = load_fixture(c.fixturePath).data;
  data.n = 2;
  c.fixturePath = temp_file("unnormalized2.json", fixture_json(make_fixture("u", data, 3)).dump());
  r = run(c);
  CHECK(r.exitCode == 1);
  CHECK(!r.report["reports"][0]["witness"].is_null());

  RunConfig all;
  all.command = Command::All;
  all.seed = 11;
  ::setenv("VERIFY_THREADS", "1", 1);
  const std::string one = run(all).report.dump();
  ::setenv("VERIFY_THREADS", "4", 1);
  const auto four = run(all);
  ::unsetenv("VERIFY_THREADS");
  CHECK(four.exitCode == 0);
  CHECK(four.report.dump() == one);

  CHECK(code_of([] { parse_range("5..1"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_range("a..b"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("run_tasks keeps order and converts errors") {
  std::vector<std::pair<std::string, Task>> tasks;
  for (int i = 0; i < 6; ++i)
    tasks.push_back({"t" + std::to_string(i), [i]() -> std::vector<VerificationReport> {
                       if (i == 3) fail(ErrorCode::NoSolution, "boom");
                       return {make_report("t" + std::to_string(i), true, Json::object(), nullptr, i)};
                     }});
  const auto out = run_tasks(tasks, 3);
  REQUIRE(out.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(out[i].checkName == "t" + std::to_string(i));
  CHECK(!out[3].passed());
  CHECK(out[3].witness["error"] == "NoSolution");
}
