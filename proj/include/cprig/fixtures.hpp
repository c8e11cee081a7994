#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cprig/fixed_points.hpp"
#include "cprig/global_index.hpp"
#include "cprig/report.hpp"

namespace cprig {

/// A parsed fixture. Weights in the JSON are raw; everything stored here is
/// already doubled.
struct Fixture {
  std::string name;
  FixedPointData data;
  SpincData spinc;
  int qOrder = 4;
  /// Global V as gamma^e (x) lambda^r summands; empty when absent.
  RootBundle V;
  /// Set for fixtures given by ambient weights.
  std::optional<LinearModelSpec> linear;
  GammaLift lift = GammaLift::Naive;
  /// Repeated ambient weights become CP^k components.
  bool extended = false;
};

/// Every failure, syntactic or an invariant violation, is reported as
/// FixtureParseError.
Fixture parse_fixture(const Json& j);
Fixture load_fixture(const std::string& path);

/// Raw-weight JSON that parse_fixture reads back to the same data.
Json fixture_json(const Fixture& f);

/// Fixture wrapper around an explicit data set.
Fixture make_fixture(std::string name, FixedPointData data, long c1, int qOrder = 4);
/// Fixture for a linear model, V empty.
Fixture make_linear_fixture(const LinearModelSpec& spec, GammaLift lift, long c1, int qOrder = 4);

enum class FixtureFamily { Linear, SyntheticStar, PetrieEdge };

FixtureFamily parse_family(const std::string& name);

struct GenerateParams {
  int m = 2;
  /// linear: bound on |a_j|.
  long maxWeight = 3;
  /// synthetic-star and petrie-edge: p_1 = -n x^2; petrie-edge defaults to m.
  std::optional<long> n;
  std::uint64_t seed = 1;
  int qOrder = 4;
};

/// Sorted ambient weight sets containing 0, |a| <= maxWeight,
/// sum = 0 mod (m+1), one representative per pair {a, -a}.
std::vector<std::vector<long>> admissible_linear_weights(int m, long maxWeight);

/// linear: every admissible weight set with the balanced lift.
/// synthetic-star: one data set satisfying the star identity by construction.
/// petrie-edge: a synthetic set with I_{Y_0} < 0, trying successive seeds.
/// InfeasibleParams when nothing qualifies.
std::vector<Fixture> generate_fixtures(FixtureFamily family, const GenerateParams& params);

}  // namespace cprig
