#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cprig/char_classes.hpp"
#include "cprig/report.hpp"

namespace cprig {

/// One connected component Y of the circle-fixed set. All weights are
/// pre-doubled (two-fold action). Chern roots are multiples of the
/// generator y of H^2(Y), with <y^dY, mu_Y> = 1.
struct FixedComponent {
  int dY = 0;
  /// Stable model of TY; weight 0 throughout.
  std::vector<LineSummand> tangentRoots;
  /// Complex normal summands, nonzero weights.
  std::vector<LineSummand> normal;
  long gammaWeight = 0;
  long gammaRoot = 1;
  /// Explicit Spin^c weight; defaults to c1 * gammaWeight.
  std::optional<long> spincWeight;
  /// Restriction of V.
  std::vector<LineSummand> VRoots;

  long normal_rank() const;
};

struct FixedPointData {
  int m = 0;
  std::vector<FixedComponent> components;
  /// p_1(M) = -n x^2
  long n = 0;

  /// Throws InvalidFixedPointData on a violated invariant.
  void validate() const;
};

/// n(V|Y): complex rank of the weight-zero part.
long fixed_rank(const std::vector<LineSummand>& v);

struct LinearModelSpec {
  int m = 0;
  /// Raw (undoubled) weights a_0..a_m.
  std::vector<long> ambientWeights;
};

/// Naive: gamma = O(1) has weight -a_i at p_i.
/// Balanced: shifted by the mean, weight S/(m+1) - a_i (needs S = 0 mod m+1).
enum class GammaLift { Naive, Balanced };

/// Standard linear action on CP^m. Distinct weights give m+1 isolated
/// points with normal weights a_j - a_i. DuplicateWeights otherwise.
FixedPointData linear_model(const LinearModelSpec& spec, GammaLift lift = GammaLift::Naive);
/// Experimental: repeated weights produce CP^k components.
FixedPointData linear_model_extended(const LinearModelSpec& spec, GammaLift lift = GammaLift::Naive);

/// V given globally as sum of gamma^e (x) lambda^r (chernRoot e, weight r
/// pre-doubled); restricts it to every component.
FixedPointData assign_V(FixedPointData data, const RootBundle& v);

/// Sum m^2 + n a^2 per component (doubled units); pass iff constant.
VerificationReport star_invariant(const FixedPointData& data);

struct FixedRankV {
  RootBundle V;
  std::vector<long> fixedRanks;
  std::vector<long> expectedRanks;
};

/// V = d(Y_0) gamma + sum_{i>0} (d(Y_i)+1) gamma (x) lambda^{-a_{Y_i}}.
/// MissingNormalization unless component 0 has gamma weight 0.
FixedRankV build_fixed_rank_V(const FixedPointData& data);

/// I_{Y_0}, the maximal component Z, both sides of the inequality chain
/// and the implied bound on n (undoubled units).
VerificationReport petrie_bound_report(const FixedPointData& data);

/// 1/2 (sum s^2 - sum m^2) in undoubled weights; NonIntegralIndex if not
/// an integer.
long jacobi_index_IY(const FixedComponent& y);

/// Isolated-point data satisfying the star identity by construction:
/// distinct gamma weights with a_0 = 0 and normal weights solving
/// sum m^2 = C - n a^2. InfeasibleParams when no C is found.
FixedPointData synthetic_star(int m, long n, std::uint64_t seed);

}  // namespace cprig
