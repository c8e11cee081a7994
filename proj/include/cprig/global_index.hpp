#pragma once

#include <vector>

#include "cprig/char_classes.hpp"
#include "cprig/report.hpp"

namespace cprig {

/// Spin^c structure on the CP^m model; c = c1 * x.
struct SpincData {
  int m = 0;
  long c1 = 0;

  /// Checks c1 = m+1 mod 2.
  static SpincData make(int m, long c1);
  /// c = (m+1)x, the anticanonical choice.
  static SpincData standard(int m) { return make(m, m + 1); }
};

/// Ahat of the standard CP^m.
TruncPoly standard_aroof(int m);

/// <e^{c/2} Ahat ch(V), mu>.
Rational index_twisted(const SpincData& spinc, const RootBundle& v);
Rational index_twisted(const SpincData& spinc, const TruncPoly& aroof, const TruncPoly& chV);

/// Index of each q-coefficient of a non-equivariant twist.
QSeries<Rational> index_series(const SpincData& spinc, const CohomSeries& twist);
QSeries<Rational> index_series(const SpincData& spinc, const TruncPoly& aroof, const CohomSeries& twist);

/// Index of the twist by (gamma-1)^{m-2} with c = (m+1)x and p_1 = b x^2,
/// higher Pontrjagin classes standard (or perturbed by `shift`).
Rational mod24_index(int m, long b, const Rational& higherShift = Rational(0));
/// The b-independent part Q in index = Q - b/24.
Rational mod24_q(int m);
/// Integrality of mod24_index over b in [bLow, bHigh] against b = m+1 mod 24.
VerificationReport mod24_check(int m, long bLow, long bHigh);

/// The floor((m-1)/2) pairings
/// <Ahat (e^x-e^-x)(e^{x/2}-e^{-x/2})^{m-3-2k}(e^{x/2}+e^{-x/2})^{2k}, mu>.
std::vector<Rational> rigidity_relations(int m, const TruncPoly& aroof);
/// Relations on standard Ahat (must vanish) and on Ahat + x^2 (must not).
VerificationReport rigidity_report(int m);

struct ReconstructionResult {
  PontrjaginCandidate p;
  TruncPoly aroof;
  int unknowns = 0;
  int relationRank = 0;
  int residualAfterRelations = 0;
  int residualAfterSignature = 0;
  bool signatureUsed = false;
};

/// Solves the rigidity relations for the homogeneous Ahat components, then
/// the signature condition, and converts to Pontrjagin classes.
/// UnderdeterminedSystem / NoSolution when the system does not pin Ahat down.
ReconstructionResult reconstruct_pontrjagin(int m);
VerificationReport reconstruct_report(int m);

}  // namespace cprig
