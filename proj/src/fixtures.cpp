#include "cprig/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "cprig/error.hpp"

namespace cprig {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { fail(ErrorCode::FixtureParseError, msg); }

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) parse_fail(where + " must be an object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) parse_fail("unknown key '" + key + "' in " + where);
}

long get_long(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) parse_fail("missing '" + std::string(key) + "' in " + where);
  const Json& v = j.at(key);
  if (!v.is_number_integer()) parse_fail("'" + std::string(key) + "' in " + where + " must be an integer");
  return v.get<long>();
}

long get_long_or(const Json& j, const char* key, long fallback, const std::string& where) {
  return j.contains(key) ? get_long(j, key, where) : fallback;
}

std::vector<long> get_long_list(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_array()) parse_fail("'" + std::string(key) + "' in " + where + " must be a list");
  std::vector<long> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer()) parse_fail("'" + std::string(key) + "' in " + where + " must hold integers");
    out.push_back(v.get<long>());
  }
  return out;
}

// half-integers allowed; returns twice the value
long get_doubled(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return 2 * v.get<long>();
  if (v.is_number_float()) {
    const double d = 2 * v.get<double>();
    if (std::nearbyint(d) == d) return static_cast<long>(d);
  }
  parse_fail(where + " must be an integer or half-integer");
}

Json undoubled(long w) {
  if (w % 2 == 0) return w / 2;
  return static_cast<double>(w) / 2;
}

GammaLift parse_lift(const Json& j) {
  if (!j.contains("gammaLift")) return GammaLift::Naive;
  const Json& v = j.at("gammaLift");
  if (v == "naive") return GammaLift::Naive;
  if (v == "balanced") return GammaLift::Balanced;
  parse_fail("gammaLift must be \"naive\" or \"balanced\"");
}

RootBundle parse_V(const Json& j) {
  if (!j.contains("V")) return RootBundle::complex({});
  if (!j.at("V").is_array()) parse_fail("'V' must be a list");
  std::vector<LineSummand> s;
  for (const auto& e : j.at("V")) {
    check_keys(e, {"gammaPower", "weight", "multiplicity"}, "V summand");
    s.push_back({get_long(e, "gammaPower", "V summand"), 2 * get_long(e, "weight", "V summand"),
                 get_long_or(e, "multiplicity", 1, "V summand")});
  }
  return RootBundle::complex(s);
}

FixedComponent parse_component(const Json& c, std::size_t index) {
  const std::string where = "component " + std::to_string(index);
  check_keys(c, {"dY", "tangentRoots", "normal", "normalWeights", "gammaWeight", "gammaRoot", "spincWeight"}, where);
  FixedComponent y;
  y.dY = static_cast<int>(get_long_or(c, "dY", 0, where));
  if (c.contains("tangentRoots")) {
    if (!c.at("tangentRoots").is_array()) parse_fail("'tangentRoots' in " + where + " must be a list");
    for (const auto& t : c.at("tangentRoots")) {
      check_keys(t, {"root", "multiplicity"}, where + " tangent root");
      y.tangentRoots.push_back({get_long(t, "root", where), 0, get_long_or(t, "multiplicity", 1, where)});
    }
  }
  if (c.contains("normal") == c.contains("normalWeights"))
    parse_fail(where + " needs exactly one of 'normal' and 'normalWeights'");
  if (c.contains("normalWeights")) {
    for (long w : get_long_list(c, "normalWeights", where)) y.normal.push_back({1, 2 * w, 1});
  } else {
    if (!c.at("normal").is_array()) parse_fail("'normal' in " + where + " must be a list");
    for (const auto& t : c.at("normal")) {
      check_keys(t, {"root", "weight", "multiplicity"}, where + " normal summand");
      y.normal.push_back({get_long_or(t, "root", 1, where), 2 * get_long(t, "weight", where),
                          get_long_or(t, "multiplicity", 1, where)});
    }
  }
  y.gammaWeight = 2 * get_long(c, "gammaWeight", where);
  y.gammaRoot = get_long_or(c, "gammaRoot", 1, where);
  if (c.contains("spincWeight")) y.spincWeight = get_doubled(c.at("spincWeight"), "'spincWeight' in " + where);
  return y;
}

Fixture parse_unchecked(const Json& j) {
  check_keys(j, {"name", "m", "ambientWeights", "components", "n", "spincC1", "qOrder", "gammaLift", "extended", "V"},
             "fixture");
  Fixture f;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) parse_fail("'name' must be a string");
    f.name = j.at("name").get<std::string>();
  }
  const long m = get_long(j, "m", "fixture");
  if (m < 1 || m > 64) parse_fail("m must lie in 1..64");
  f.qOrder = static_cast<int>(get_long_or(j, "qOrder", 4, "fixture"));
  if (f.qOrder < 0) parse_fail("qOrder must be non-negative");
  f.spinc = SpincData::make(static_cast<int>(m), get_long_or(j, "spincC1", m + 1, "fixture"));
  f.lift = parse_lift(j);
  if (j.contains("extended")) {
    if (!j.at("extended").is_boolean()) parse_fail("'extended' must be a boolean");
    f.extended = j.at("extended").get<bool>();
  }
  f.V = parse_V(j);

  if (j.contains("ambientWeights") == j.contains("components"))
    parse_fail("fixture needs exactly one of 'ambientWeights' and 'components'");
  if (j.contains("ambientWeights")) {
    LinearModelSpec spec{static_cast<int>(m), get_long_list(j, "ambientWeights", "fixture")};
    f.data = f.extended ? linear_model_extended(spec, f.lift) : linear_model(spec, f.lift);
    f.linear = spec;
    if (j.contains("n") && get_long(j, "n", "fixture") != f.data.n)
      parse_fail("n of a linear model is -(m+1) = " + std::to_string(f.data.n));
  } else {
    if (j.contains("gammaLift") || j.contains("extended"))
      parse_fail("'gammaLift' and 'extended' only apply to ambientWeights fixtures");
    if (!j.at("components").is_array()) parse_fail("'components' must be a list");
    f.data.m = static_cast<int>(m);
    f.data.n = get_long(j, "n", "fixture");
    std::size_t i = 0;
    for (const auto& c : j.at("components")) f.data.components.push_back(parse_component(c, i++));
    f.data.validate();
  }
  return f;
}

Json V_json(const RootBundle& v) {
  Json out = Json::array();
  for (const auto& l : v.summands)
    out.push_back(Json{{"gammaPower", l.chernRoot}, {"weight", undoubled(l.weight)}, {"multiplicity", l.multiplicity}});
  return out;
}

Json component_json(const FixedComponent& y) {
  Json c{{"dY", y.dY}};
  if (!y.tangentRoots.empty()) {
    Json t = Json::array();
    for (const auto& l : y.tangentRoots) t.push_back(Json{{"root", l.chernRoot}, {"multiplicity", l.multiplicity}});
    c["tangentRoots"] = t;
  }
  const bool simple =
      std::all_of(y.normal.begin(), y.normal.end(), [](const LineSummand& l) { return l.chernRoot == 1 && l.multiplicity == 1; });
  if (simple) {
    Json w = Json::array();
    for (const auto& l : y.normal) w.push_back(undoubled(l.weight));
    c["normalWeights"] = w;
  } else {
    Json t = Json::array();
    for (const auto& l : y.normal)
      t.push_back(Json{{"root", l.chernRoot}, {"weight", undoubled(l.weight)}, {"multiplicity", l.multiplicity}});
    c["normal"] = t;
  }
  c["gammaWeight"] = undoubled(y.gammaWeight);
  if (y.gammaRoot != 1) c["gammaRoot"] = y.gammaRoot;
  if (y.spincWeight) c["spincWeight"] = undoubled(*y.spincWeight);
  return c;
}

std::string join_weights(const std::vector<long>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "_" : "") + std::to_string(a[i]);
  return s;
}

}  // namespace

Fixture parse_fixture(const Json& j) {
  try {
    return parse_unchecked(j);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::FixtureParseError) throw;
    fail(ErrorCode::FixtureParseError, e.what());
  } catch (const Json::exception& e) {
    fail(ErrorCode::FixtureParseError, e.what());
  }
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::FixtureParseError, "cannot open fixture '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorCode::FixtureParseError, path + ": " + e.what());
  }
  Fixture f = parse_fixture(j);
  if (f.name.empty()) {
    const auto slash = path.find_last_of('/');
    f.name = slash == std::string::npos ? path : path.substr(slash + 1);
  }
  return f;
}

Json fixture_json(const Fixture& f) {
  Json j;
  if (!f.name.empty()) j["name"] = f.name;
  j["m"] = f.data.m;
  if (f.linear) {
    j["ambientWeights"] = f.linear->ambientWeights;
    j["gammaLift"] = f.lift == GammaLift::Balanced ? "balanced" : "naive";
    if (f.extended) j["extended"] = true;
  } else {
    Json comps = Json::array();
    for (const auto& y : f.data.components) comps.push_back(component_json(y));
    j["components"] = comps;
  }
  j["n"] = f.data.n;
  j["spincC1"] = f.spinc.c1;
  j["qOrder"] = f.qOrder;
  if (!f.V.summands.empty()) j["V"] = V_json(f.V);
  return j;
}

Fixture make_fixture(std::string name, FixedPointData data, long c1, int qOrder) {
  data.validate();
  Fixture f;
  f.name = std::move(name);
  f.spinc = SpincData::make(data.m, c1);
  f.data = std::move(data);
  f.qOrder = qOrder;
  f.V = RootBundle::complex({});
  return f;
}

Fixture make_linear_fixture(const LinearModelSpec& spec, GammaLift lift, long c1, int qOrder) {
  Fixture f = make_fixture("linear-m" + std::to_string(spec.m) + "-" + join_weights(spec.ambientWeights),
                           linear_model(spec, lift), c1, qOrder);
  f.linear = spec;
  f.lift = lift;
  return f;
}

FixtureFamily parse_family(const std::string& name) {
  if (name == "linear") return FixtureFamily::Linear;
  if (name == "synthetic-star") return FixtureFamily::SyntheticStar;
  if (name == "petrie-edge") return FixtureFamily::PetrieEdge;
  fail(ErrorCode::InvalidArgument, "unknown fixture family '" + name + "'");
}

std::vector<std::vector<long>> admissible_linear_weights(int m, long maxWeight) {
  if (m < 1 || maxWeight < 0) fail(ErrorCode::InfeasibleParams, "linear family needs m >= 1 and maxWeight >= 0");
  // Translating all weights by t moves the sum by (m+1)t and leaves every
  // difference alone, so classes are taken up to translation and a -> -a;
  // the representative is the in-range translate with the smallest |sum|.
  const long width = 2 * maxWeight + 1;
  std::map<std::vector<long>, std::pair<long, std::vector<long>>> best;
  std::vector<long> pick(m + 1);
  auto shape = [](std::vector<long> a) {
    std::sort(a.begin(), a.end());
    const long lo = a.front();
    for (auto& v : a) v -= lo;
    return a;
  };
  // combinations of m+1 values out of [-maxWeight, maxWeight]
  std::vector<int> idx(m + 1);
  if (m + 1 > width) fail(ErrorCode::InfeasibleParams, "not enough distinct weights with |a| <= " + std::to_string(maxWeight));
  for (int i = 0; i <= m; ++i) idx[i] = i;
  while (true) {
    long sum = 0;
    for (int i = 0; i <= m; ++i) {
      pick[i] = idx[i] - maxWeight;
      sum += pick[i];
    }
    if (sum % (m + 1) == 0) {
      std::vector<long> neg(pick.size());
      std::transform(pick.begin(), pick.end(), neg.begin(), [](long v) { return -v; });
      const auto key = std::min(shape(pick), shape(neg));
      std::sort(neg.begin(), neg.end());
      const auto rep = std::min(pick, neg);
      auto it = best.find(key);
      const long score = std::labs(sum);
      if (it == best.end() || score < it->second.first || (score == it->second.first && rep < it->second.second))
        best[key] = {score, rep};
    }
    int k = m;
    while (k >= 0 && idx[k] == width - (m + 1) + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i <= m; ++i) idx[i] = idx[i - 1] + 1;
  }
  std::vector<std::vector<long>> out;
  for (auto& [_, v] : best) out.push_back(v.second);
  if (out.empty()) fail(ErrorCode::InfeasibleParams, "no admissible weight vector");
  return out;
}

std::vector<Fixture> generate_fixtures(FixtureFamily family, const GenerateParams& params) {
  std::vector<Fixture> out;
  const int m = params.m;
  switch (family) {
    case FixtureFamily::Linear:
      for (const auto& a : admissible_linear_weights(m, params.maxWeight))
        out.push_back(make_linear_fixture({m, a}, GammaLift::Balanced, m + 1, params.qOrder));
      break;
    case FixtureFamily::SyntheticStar: {
      if (!params.n) fail(ErrorCode::InfeasibleParams, "synthetic-star needs n");
      auto data = synthetic_star(m, *params.n, params.seed);
      out.push_back(make_fixture("synthetic-star-m" + std::to_string(m) + "-n" + std::to_string(*params.n) + "-seed" +
                                     std::to_string(params.seed),
                                 std::move(data), m + 1, params.qOrder));
      break;
    }
    case FixtureFamily::PetrieEdge: {
      const long n = params.n.value_or(m);
      constexpr int kAttempts = 64;
      for (int t = 0; t < kAttempts && out.empty(); ++t) {
        const std::uint64_t seed = params.seed + t;
        FixedPointData data;
        try {
          data = synthetic_star(m, n, seed);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::InfeasibleParams) throw;
          continue;
        }
        const auto report = petrie_bound_report(data);
        const Json& iy = report.value.at("IY0");
        if (iy.at("num").get<std::string>().front() != '-') continue;
        out.push_back(make_fixture("petrie-edge-m" + std::to_string(m) + "-n" + std::to_string(n) + "-seed" +
                                       std::to_string(seed),
                                   std::move(data), m + 1, params.qOrder));
      }
      if (out.empty())
        fail(ErrorCode::InfeasibleParams, "no synthetic data with I_{Y_0} < 0 for m=" + std::to_string(m) +
                                              ", n=" + std::to_string(n));
      break;
    }
  }
  return out;
}

}  // namespace cprig
