#include "cprig/run.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <memory>
#include <random>
#include <regex>
#include <thread>

#include "cprig/error.hpp"
#include "cprig/fixtures.hpp"
#include "cprig/global_index.hpp"
#include "cprig/jacobi.hpp"
#include "cprig/lefschetz.hpp"

namespace cprig {

namespace {

const std::vector<std::pair<Command, std::string>> kCommands = {
    {Command::Lefschetz, "lefschetz"}, {Command::Star, "star"},     {Command::Mod24, "mod24"},
    {Command::Rigidity, "rigidity"},   {Command::PetrieBound, "petrie-bound"}, {Command::Jacobi, "jacobi"},
    {Command::Reconstruct, "reconstruct"}, {Command::All, "all"},
};

using TaskList = std::vector<std::pair<std::string, Task>>;

VerificationReport error_report(const std::string& name, const std::string& code, const std::string& message) {
  VerificationReport r;
  r.checkName = name;
  r.status = Status::Fail;
  r.witness = Json{{"error", code}, {"message", message}};
  return r;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Folds many residual reports into one: worst residual, failure count and
// the first failing case as witness.
VerificationReport fold(std::string name, const std::vector<VerificationReport>& parts, Json params) {
  double worst = 0;
  long failures = 0;
  Json witness = nullptr;
  for (const auto& p : parts) {
    if (p.value.is_object() && p.value.contains("residual")) worst = std::max(worst, p.value["residual"].get<double>());
    if (!p.passed()) {
      ++failures;
      if (witness.is_null()) witness = Json{{"case", p.params}, {"detail", p.witness}};
    }
  }
  VerificationReport r;
  r.checkName = std::move(name);
  r.status = failures == 0 ? Status::NumericPass : Status::Fail;
  r.params = std::move(params);
  r.value = Json{{"cases", parts.size()}, {"failures", failures}, {"maxResidual", worst}};
  r.witness = witness;
  return r;
}

struct JacobiSuite {
  NumericPolicy policy;
  std::vector<ModularPoint> points;
};

JacobiSuite jacobi_suite(const RunConfig& c) {
  JacobiSuite s;
  s.policy.tolerance = c.tolerance;
  std::mt19937_64 rng(c.seed);
  for (int i = 0; i < 20; ++i) {
    const double tx = unit(rng) - 0.5, ty = 0.5 + unit(rng);
    const double zx = unit(rng) - 0.5, zy = 0.4 * (unit(rng) - 0.5);
    s.points.push_back(ModularPoint::make({tx, ty}, {zx, zy}));
  }
  return s;
}

// (tangent, V) weight systems, all weights even
const std::vector<std::pair<std::vector<long>, std::vector<long>>> kWeightSystems = {
    {{2, -2}, {}}, {{2, 4}, {2}}, {{2, -4, 6}, {2, 4}}, {{4}, {2, 2}}, {{2, 2, -2}, {4}},
};

void add_jacobi(TaskList& tasks, const RunConfig& c, const std::optional<Fixture>& fixture, std::string* csv) {
  const auto suite = std::make_shared<JacobiSuite>(jacobi_suite(c));
  const Json base{{"points", suite->points.size()}, {"tolerance", c.tolerance}};
  tasks.push_back({"jacobi-lattice", [suite, base] {
                     std::vector<VerificationReport> parts;
                     for (const auto& p : suite->points)
                       for (long a = -2; a <= 2; ++a)
                         for (long b = -2; b <= 2; ++b) parts.push_back(lattice_shift_check(p, a, b, suite->policy));
                     return std::vector{fold("jacobi-lattice", parts, base)};
                   }});
  tasks.push_back({"jacobi-modular", [suite, base] {
                     std::vector<VerificationReport> parts;
                     for (const auto& p : suite->points)
                       for (const auto& A : {SL2Z::S(), SL2Z::T(), SL2Z::T() * SL2Z::S()})
                         parts.push_back(modular_check(p, A, suite->policy));
                     Json params = base;
                     params["matrices"] = {"S", "T", "TS"};
                     return std::vector{fold("jacobi-modular", parts, params)};
                   }});
  tasks.push_back({"jacobi-index-law", [suite, base] {
                     std::vector<VerificationReport> parts;
                     Json systems = Json::array();
                     for (const auto& [t, v] : kWeightSystems) {
                       systems.push_back(Json{{"tangent", t}, {"V", v}, {"index", fy_index(t, v)}});
                       for (const auto& p : suite->points)
                         for (const auto& [a, b] : {std::pair{1L, 0L}, {0L, 1L}, {-1L, 1L}})
                           parts.push_back(fy_index_law_check(t, v, p, a, b, suite->policy));
                     }
                     Json params = base;
                     params["weightSystems"] = systems;
                     return std::vector{fold("jacobi-index-law", parts, params)};
                   }});
  tasks.push_back({"phi-series", [suite, base, order = std::max(c.qOrder, 8)] {
                     std::vector<VerificationReport> parts;
                     for (const auto& p : suite->points) parts.push_back(phi_series_cross_check(p, order, suite->policy));
                     Json params = base;
                     params["qOrder"] = order;
                     return std::vector{fold("phi-series", parts, params)};
                   }});

  FixedPointData data;
  SpincData spinc;
  const bool isolated = fixture && std::all_of(fixture->data.components.begin(), fixture->data.components.end(),
                                               [](const FixedComponent& y) { return y.dY == 0; });
  if (isolated) {
    data = assign_V(fixture->data, fixture->V);
    spinc = fixture->spinc;
  } else {
    data = linear_model({2, {0, 1, -1}});
    spinc = SpincData::standard(2);
  }
  // the scan runs inline so the CSV is available to the caller
  try {
    NumericPolicy policy;
    policy.tolerance = c.tolerance;
    auto scan = real_line_pole_scan(data, spinc, Complex(0.1, 1.0), c.scanPoints, policy, 0.05, c.qOrder);
    if (csv) *csv = scan_csv(scan.samples);
    tasks.push_back({"pole-scan", [r = scan.report] { return std::vector{r}; }});
  } catch (const Error& e) {
    tasks.push_back({"pole-scan", [r = error_report("pole-scan", std::string(to_string(e.code())), e.what())] {
                       return std::vector{r};
                     }});
  }
}

void add_lefschetz(TaskList& tasks, const RunConfig& c, const std::optional<Fixture>& fixture) {
  if (fixture) {
    tasks.push_back({"lefschetz", [f = *fixture, order = c.qOrder] {
                       return std::vector{lefschetz_sum(f.data, f.spinc, f.V, order).report};
                     }});
    return;
  }
  const int hi = c.m.value_or(3);
  for (int m = c.m ? hi : 1; m <= hi; ++m)
    tasks.push_back({"lefschetz", [m, order = c.qOrder] {
                       std::vector<VerificationReport> out;
                       const auto V = RootBundle::complex({});
                       for (const auto& a : admissible_linear_weights(m, 2)) {
                         const auto f = make_linear_fixture({m, a}, GammaLift::Naive, m + 1, order);
                         out.push_back(lefschetz_sum(f.data, f.spinc, V, order).report);
                       }
                       return out;
                     }});
}

void add_star(TaskList& tasks, const RunConfig& c, const std::optional<Fixture>& fixture) {
  if (fixture) {
    tasks.push_back({"star", [f = *fixture] { return std::vector{star_invariant(f.data)}; }});
    return;
  }
  const int lo = c.m.value_or(2), hi = c.m.value_or(5);
  for (int m = lo; m <= hi; ++m)
    tasks.push_back({"star", [m] {
                       std::vector<VerificationReport> out;
                       for (const auto& f : generate_fixtures(FixtureFamily::Linear, {m, 3, {}, 1, 0}))
                         out.push_back(star_invariant(f.data));
                       return out;
                     }});
}

void add_petrie(TaskList& tasks, const RunConfig& c, const std::optional<Fixture>& fixture) {
  if (fixture) {
    tasks.push_back({"petrie-bound", [f = *fixture] { return std::vector{petrie_bound_report(f.data)}; }});
    return;
  }
  const int lo = c.m.value_or(3), hi = c.m.value_or(5);
  for (int m = lo; m <= hi; ++m)
    tasks.push_back({"petrie-bound", [m, c] {
                       std::vector<VerificationReport> out;
                       const long nLo = c.n.value_or(0), nHi = c.n.value_or(m + 2);
                       for (long n = nLo; n <= nHi; ++n) out.push_back(petrie_bound_report(synthetic_star(m, n, c.seed)));
                       return out;
                     }});
}

void add_range(TaskList& tasks, const std::string& name, int lo, int hi, std::function<VerificationReport(int)> f) {
  for (int m = lo; m <= hi; ++m) tasks.push_back({name, [m, f] { return std::vector{f(m)}; }});
}

}  // namespace

Command parse_command(const std::string& name) {
  for (const auto& [c, n] : kCommands)
    if (n == name) return c;
  fail(ErrorCode::InvalidArgument, "unknown command '" + name + "'");
}

std::string to_string(Command c) {
  for (const auto& [k, n] : kCommands)
    if (k == c) return n;
  return "?";
}

void RunConfig::validate() const {
  if (qOrder < 0) fail(ErrorCode::InvalidArgument, "q-order must be non-negative");
  if (!(tolerance > 0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (scanPoints < 2) fail(ErrorCode::InvalidArgument, "scan needs at least two points");
  if (m && *m < 1) fail(ErrorCode::InvalidArgument, "m must be positive");
  if (bRange && bRange->first > bRange->second) fail(ErrorCode::InvalidArgument, "empty b-range");
}

std::pair<long, long> parse_range(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch mt;
  if (!std::regex_match(text, mt, re)) fail(ErrorCode::InvalidArgument, "range must look like lo..hi, got '" + text + "'");
  const long lo = std::stol(mt[1]), hi = std::stol(mt[2]);
  if (lo > hi) fail(ErrorCode::InvalidArgument, "empty range '" + text + "'");
  return {lo, hi};
}

unsigned worker_limit() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("VERIFY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = static_cast<unsigned>(v);
  }
  return n;
}

std::vector<VerificationReport> run_tasks(const std::vector<std::pair<std::string, Task>>& tasks, unsigned workers) {
  std::vector<std::vector<VerificationReport>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        slots[i] = tasks[i].second();
      } catch (const Error& e) {
        slots[i] = {error_report(tasks[i].first, std::string(to_string(e.code())), e.what())};
      } catch (const std::exception& e) {
        slots[i] = {error_report(tasks[i].first, "InternalError", e.what())};
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<VerificationReport> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

RunResult run(const RunConfig& c) {
  RunResult result;
  Json head{{"command", to_string(c.command)}, {"seed", c.seed}, {"qOrder", c.qOrder}, {"tolerance", c.tolerance}};
  if (!c.fixturePath.empty()) head["fixture"] = c.fixturePath;

  std::optional<Fixture> fixture;
  try {
    c.validate();
    if (!c.fixturePath.empty()) fixture = load_fixture(c.fixturePath);
  } catch (const Error& e) {
    head["status"] = "fail";
    head["error"] = Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    head["reports"] = Json::array();
    result.report = head;
    result.exitCode = 2;
    return result;
  }
  if (fixture) head["fixtureName"] = fixture->name;

  TaskList tasks;
  const bool all = c.command == Command::All;
  const int mOr = c.m.value_or(0);
  auto b = c.bRange.value_or(std::pair<long, long>{0, 72});
  if (all || c.command == Command::Lefschetz) add_lefschetz(tasks, c, fixture);
  if (all || c.command == Command::Star) add_star(tasks, c, fixture);
  if (all || c.command == Command::PetrieBound) add_petrie(tasks, c, fixture);
  if (all || c.command == Command::Mod24)
    add_range(tasks, "mod24", c.m ? mOr : (all ? 3 : 4), c.m ? mOr : (all ? 11 : 4),
              [b](int m) { return mod24_check(m, b.first, b.second); });
  if (all || c.command == Command::Rigidity)
    add_range(tasks, "rigidity", c.m ? mOr : (all ? 3 : 5), c.m ? mOr : (all ? 12 : 5), rigidity_report);
  if (all || c.command == Command::Reconstruct)
    add_range(tasks, "reconstruct", c.m ? mOr : 4, c.m ? mOr : (all ? 10 : 4), reconstruct_report);
  if (all || c.command == Command::Jacobi) add_jacobi(tasks, c, fixture, c.csvPath.empty() ? nullptr : &result.csv);

  auto reports = run_tasks(tasks, worker_limit());
  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& x, const VerificationReport& y) { return x.checkName < y.checkName; });
  bool ok = true;
  Json list = Json::array();
  Json summary = Json::object();
  for (auto& r : reports) {
    r.params["seed"] = c.seed;
    ok = ok && r.passed();
    auto& s = summary[r.checkName];
    if (s.is_null()) s = Json{{"pass", 0}, {"fail", 0}};
    s[r.passed() ? "pass" : "fail"] = s[r.passed() ? "pass" : "fail"].get<long>() + 1;
    list.push_back(r.to_json());
  }
  head["status"] = ok ? "pass" : "fail";
  head["summary"] = summary;
  head["reports"] = list;
  result.report = head;
  result.exitCode = ok ? 0 : 1;
  return result;
}

}  // namespace cprig
