#include "cprig/fixed_points.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace cprig {

namespace {

void bad_data(const std::string& what) { fail(ErrorCode::InvalidFixedPointData, what); }

long sum_sq(const std::vector<LineSummand>& v) {
  long s = 0;
  for (const auto& l : v) s += l.multiplicity * l.weight * l.weight;
  return s;
}

long rank_of(const std::vector<LineSummand>& v) {
  long r = 0;
  for (const auto& l : v) r += l.multiplicity;
  return r;
}

}  // namespace

long FixedComponent::normal_rank() const { return rank_of(normal); }

void FixedPointData::validate() const {
  if (m < 1) bad_data("dimension must be positive");
  if (components.empty()) bad_data("no fixed components");
  long total = 0;
  std::set<long> gammas;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& y = components[i];
    const std::string at = " at component " + std::to_string(i);
    if (y.dY < 0 || y.dY > m) bad_data("fixed component dimension out of range" + at);
    total += y.dY + 1;
    if (y.normal_rank() != m - y.dY) bad_data("normal rank must be m - d(Y)" + at);
    for (const auto& l : y.normal) {
      if (l.weight == 0) fail(ErrorCode::ZeroNormalWeight, "zero normal weight" + at);
      if (l.weight % 2 != 0) bad_data("normal weight not doubled" + at);
      if (l.multiplicity <= 0) bad_data("normal multiplicity must be positive" + at);
    }
    for (const auto& l : y.tangentRoots)
      if (l.weight != 0) bad_data("tangent roots of Y carry weight 0" + at);
    for (const auto& l : y.VRoots)
      if (l.weight % 2 != 0) bad_data("V weight not doubled" + at);
    if (y.gammaWeight % 2 != 0) bad_data("gamma weight not doubled" + at);
    if (y.spincWeight && *y.spincWeight % 2 != 0) bad_data("Spin^c weight not doubled" + at);
    if (!gammas.insert(y.gammaWeight).second) bad_data("gamma weights must be distinct" + at);
  }
  if (total != m + 1) bad_data("sum of (d(Y)+1) must equal m+1");
}

long fixed_rank(const std::vector<LineSummand>& v) {
  long r = 0;
  for (const auto& l : v)
    if (l.weight == 0) r += l.multiplicity;
  return r;
}

namespace {

long gamma_weight_doubled(long a, long sum, int m, GammaLift lift) {
  if (lift == GammaLift::Naive) return -2 * a;
  return 2 * (sum / (m + 1) - a);
}

long checked_sum(const LinearModelSpec& spec, GammaLift lift) {
  if (spec.m < 1) fail(ErrorCode::InvalidArgument, "linear model needs m >= 1");
  if (static_cast<int>(spec.ambientWeights.size()) != spec.m + 1)
    fail(ErrorCode::InvalidArgument, "linear model needs m+1 ambient weights");
  long s = 0;
  for (long a : spec.ambientWeights) s += a;
  if (lift == GammaLift::Balanced && s % (spec.m + 1) != 0)
    fail(ErrorCode::InvalidArgument, "balanced lift needs the weight sum divisible by m+1");
  return s;
}

}  // namespace

FixedPointData linear_model(const LinearModelSpec& spec, GammaLift lift) {
  checked_sum(spec, lift);
  std::set<long> seen(spec.ambientWeights.begin(), spec.ambientWeights.end());
  if (seen.size() != spec.ambientWeights.size()) fail(ErrorCode::DuplicateWeights, "ambient weights must be distinct");
  return linear_model_extended(spec, lift);
}

FixedPointData linear_model_extended(const LinearModelSpec& spec, GammaLift lift) {
  const long s = checked_sum(spec, lift);
  const int m = spec.m;
  const auto& a = spec.ambientWeights;
  std::vector<long> blocks;
  for (long w : a)
    if (std::find(blocks.begin(), blocks.end(), w) == blocks.end()) blocks.push_back(w);
  FixedPointData data;
  data.m = m;
  data.n = -(m + 1);
  for (long value : blocks) {
    FixedComponent y;
    const long k = std::count(a.begin(), a.end(), value);
    y.dY = static_cast<int>(k - 1);
    if (k > 1) y.tangentRoots.push_back({1, 0, k});
    for (long w : a)
      if (w != value) y.normal.push_back({1, 2 * (w - value), 1});
    y.gammaWeight = gamma_weight_doubled(value, s, m, lift);
    y.gammaRoot = 1;
    data.components.push_back(std::move(y));
  }
  data.validate();
  return data;
}

FixedPointData assign_V(FixedPointData data, const RootBundle& v) {
  if (v.is_paired()) fail(ErrorCode::InvalidArgument, "V must be a complex bundle");
  for (auto& y : data.components) {
    y.VRoots.clear();
    for (const auto& l : v.summands)
      y.VRoots.push_back({l.chernRoot * y.gammaRoot, l.chernRoot * y.gammaWeight + l.weight, l.multiplicity});
  }
  return data;
}

VerificationReport star_invariant(const FixedPointData& data) {
  data.validate();
  Json values = Json::array();
  std::vector<long> cs;
  for (const auto& y : data.components) {
    const long c = sum_sq(y.normal) + data.n * y.gammaWeight * y.gammaWeight;
    cs.push_back(c);
    values.push_back(c);
  }
  Json witness = nullptr;
  bool ok = true;
  for (std::size_t i = 1; i < cs.size(); ++i) {
    if (cs[i] != cs[0]) {
      ok = false;
      witness = Json{{"component", i}, {"value", cs[i]}, {"reference", cs[0]}, {"values", values}};
      break;
    }
  }
  Json gammas = Json::array();
  for (const auto& y : data.components) gammas.push_back(y.gammaWeight);
  return make_report("star", ok, Json{{"m", data.m}, {"n", data.n}, {"gammaWeights", gammas}, {"units", "doubled"}}, witness,
                     Json{{"C", values}});
}

FixedRankV build_fixed_rank_V(const FixedPointData& data) {
  data.validate();
  if (data.components[0].gammaWeight != 0)
    fail(ErrorCode::MissingNormalization, "component 0 must carry gamma weight 0");
  std::vector<LineSummand> s;
  const auto& y0 = data.components[0];
  if (y0.dY > 0) s.push_back({1, 0, y0.dY});
  for (std::size_t i = 1; i < data.components.size(); ++i) {
    const auto& y = data.components[i];
    s.push_back({1, -y.gammaWeight, y.dY + 1});
  }
  FixedRankV out{RootBundle::complex(s), {}, {}};
  const auto restricted = assign_V(data, out.V);
  for (std::size_t i = 0; i < restricted.components.size(); ++i) {
    const auto& y = restricted.components[i];
    out.fixedRanks.push_back(fixed_rank(y.VRoots));
    out.expectedRanks.push_back(i == 0 ? y.dY : y.dY + 1);
  }
  if (out.fixedRanks != out.expectedRanks) fail(ErrorCode::InvalidFixedPointData, "fixed ranks of V do not match d(Y)");
  return out;
}

VerificationReport petrie_bound_report(const FixedPointData& data) {
  data.validate();
  const auto& comps = data.components;
  // back to undoubled units: every square shrinks by 4
  auto sq = [](long w) { return make_rational(w * w, 4); };
  auto normal_sq = [&](const FixedComponent& y) {
    Rational s;
    for (const auto& l : y.normal) s += l.multiplicity * sq(l.weight);
    return s;
  };
  const bool normalized = comps[0].gammaWeight == 0;
  const Rational sumY0 = normal_sq(comps[0]);
  Rational rhs;
  for (std::size_t i = 1; i < comps.size(); ++i) rhs += (comps[i].dY + 1) * sq(comps[i].gammaWeight);
  const Rational iY0 = (rhs - sumY0) / 2;

  std::size_t z = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (sq(comps[i].gammaWeight) > sq(comps[z].gammaWeight)) z = i;
  const Rational aZ2 = sq(comps[z].gammaWeight);
  const Rational sumZ = normal_sq(comps[z]);
  const Rational lhs = sumZ + data.n * aZ2;

  const bool starHolds = star_invariant(data).passed();
  const bool hypothesis = data.n >= 0;
  const bool equalityStep = !starHolds || lhs == sumY0;
  Json bound = nullptr;
  bool boundOk = true;
  if (iY0 >= 0 && starHolds && !is_zero(aZ2)) {
    const Rational nMax = (rhs - sumZ) / aZ2;
    bound = to_json(nMax);
    boundOk = lhs <= rhs && Rational(data.n) <= nMax && nMax < data.m;
  }
  const bool conclusion = iY0 < 0 || data.n < data.m;
  const bool ok = equalityStep && boundOk && conclusion;

  Json value{{"IY0", to_json(iY0)},
             {"Z", z},
             {"aZSquared", to_json(aZ2)},
             {"sumMY0Squared", to_json(sumY0)},
             {"lhs", to_json(lhs)},
             {"rhs", to_json(rhs)},
             {"impliedBoundOnN", bound},
             {"starHolds", starHolds},
             {"normalized", normalized},
             {"hypothesisNNonNegative", hypothesis}};
  Json witness = nullptr;
  if (!ok) witness = Json{{"equalityStep", equalityStep}, {"boundStep", boundOk}, {"nLessThanM", conclusion}, {"n", data.n}};
  return make_report("petrie-bound", ok, Json{{"m", data.m}, {"n", data.n}, {"units", "undoubled"}}, witness, value);
}

long jacobi_index_IY(const FixedComponent& y) {
  const long twice8 = sum_sq(y.VRoots) - sum_sq(y.normal);
  if (twice8 % 8 != 0)
    fail(ErrorCode::NonIntegralIndex, "I_Y = " + std::to_string(twice8) + "/8 is not an integer");
  return twice8 / 8;
}

namespace {

/// reach[k][t]: t is a sum of exactly k squares of positive integers.
std::vector<std::vector<char>> square_sums(int k, long limit) {
  std::vector<std::vector<char>> reach(k + 1, std::vector<char>(limit + 1, 0));
  reach[0][0] = 1;
  for (int j = 1; j <= k; ++j)
    for (long t = 1; t <= limit; ++t)
      for (long s = 1; s * s <= t; ++s)
        if (reach[j - 1][t - s * s]) {
          reach[j][t] = 1;
          break;
        }
  return reach;
}

std::vector<long> decompose(const std::vector<std::vector<char>>& reach, int k, long t) {
  std::vector<long> parts;
  for (int j = k; j >= 1; --j) {
    long s = 1;
    while ((s + 1) * (s + 1) <= t) ++s;
    while (s >= 1 && !reach[j - 1][t - s * s]) --s;
    parts.push_back(s);
    t -= s * s;
  }
  return parts;
}

}  // namespace

FixedPointData synthetic_star(int m, long n, std::uint64_t seed) {
  if (m < 1) fail(ErrorCode::InfeasibleParams, "synthetic data needs m >= 1");
  std::mt19937_64 rng(seed);
  // distinct nonzero gamma weights from [-m, m], drawn without replacement
  std::vector<long> pool;
  for (long v = -m; v <= m; ++v)
    if (v != 0) pool.push_back(v);
  for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng() % i]);
  std::vector<long> a{0};
  a.insert(a.end(), pool.begin(), pool.begin() + m);

  long maxA2 = 0;
  for (long v : a) maxA2 = std::max(maxA2, v * v);
  const long lo = std::max<long>(m, m + n * maxA2);
  const long limit = lo + 64L * m + std::labs(n) * maxA2 + 64;
  const auto reach = square_sums(m, limit);
  long c = -1;
  for (long cand = std::max<long>(m, n < 0 ? m : lo); cand <= limit && c < 0; ++cand) {
    bool okAll = true;
    for (long v : a) {
      const long t = cand - n * v * v;
      if (t < m || t > limit || !reach[m][t]) {
        okAll = false;
        break;
      }
    }
    if (okAll) c = cand;
  }
  if (c < 0) fail(ErrorCode::InfeasibleParams, "no constant C solves the star system for m=" + std::to_string(m) + ", n=" + std::to_string(n));

  FixedPointData data;
  data.m = m;
  data.n = n;
  for (long v : a) {
    FixedComponent y;
    y.gammaWeight = 2 * v;
    for (long s : decompose(reach, m, c - n * v * v)) {
      const long sign = (rng() & 1) ? 1 : -1;
      y.normal.push_back({1, 2 * sign * s, 1});
    }
    data.components.push_back(std::move(y));
  }
  data.validate();
  return data;
}

}  // namespace cprig
