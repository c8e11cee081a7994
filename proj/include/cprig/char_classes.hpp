#pragma once

#include <vector>

#include "cprig/laurent.hpp"
#include "cprig/qseries.hpp"
#include "cprig/trunc_poly.hpp"

namespace cprig {

/// A line summand with Chern root chernRoot * x and circle weight `weight`
/// (stored pre-doubled). Negative multiplicities describe virtual bundles.
struct LineSummand {
  long chernRoot = 0;
  long weight = 0;
  long multiplicity = 1;

  friend bool operator==(const LineSummand&, const LineSummand&) = default;
};

enum class BundleKind { Complex, RealOrientedPaired, SpinPaired };

/// Bundle described by its (equivariant) formal roots.
///
/// For the paired kinds every summand stands for the pair
/// +-(chernRoot * x + weight * z); the listed sign is the chosen positive
/// root, which fixes the orientation used by euler_class.
struct RootBundle {
  std::vector<LineSummand> summands;
  BundleKind kind = BundleKind::Complex;

  static RootBundle complex(std::vector<LineSummand> s) { return make(std::move(s), BundleKind::Complex); }
  static RootBundle paired(std::vector<LineSummand> s) { return make(std::move(s), BundleKind::RealOrientedPaired); }
  static RootBundle spin(std::vector<LineSummand> s) { return make(std::move(s), BundleKind::SpinPaired); }

  bool is_paired() const { return kind != BundleKind::Complex; }
  /// Complex rank for complex kind; number of root pairs otherwise.
  long rank() const;

 private:
  static RootBundle make(std::vector<LineSummand> s, BundleKind kind);
};

/// E + F; both must have the same kind.
RootBundle direct_sum(const RootBundle& a, const RootBundle& b);
/// Underlying oriented real bundle of a complex bundle (complex orientation).
RootBundle realify(const RootBundle& complex_bundle);
/// Stable model of T(CP^m): m+1 pairs with root x (TM + 1 = (m+1) gamma).
RootBundle cpm_tangent(int m);
/// (gamma - 1)^k expanded binomially into virtual line summands.
RootBundle gamma_minus_one_power(int k);

enum class Genus { AHat, L };

/// Genus factor g(t) as an exact power series: t/(e^{t/2}-e^{-t/2}) for
/// Ahat, t/tanh t for L.
PowerSeries genus_series(Genus genus, int degree);

/// prod over root pairs of g(c x), in Q[x]/(x^{m+1}).
TruncPoly multiplicative_class(Genus genus, const RootBundle& bundle, int m);

/// sum multiplicity * e^{c x}.
TruncPoly chern_character(const RootBundle& bundle, int m);
/// sum multiplicity * e^{c x} lambda^{weight}.
TruncPolyT<LaurentPoly> chern_character_equivariant(const RootBundle& bundle, int m);

/// Product of the chosen positive roots.
TruncPoly euler_class(const RootBundle& bundle, int m);

/// prod over pairs of (e^{cx/2} + e^{-cx/2}).
TruncPoly spinor_character(const RootBundle& w, int m);
/// prod over pairs of (e^{cx/2} lambda^{weight/2} + e^{-cx/2} lambda^{-weight/2});
/// OddHalfWeight when a weight is odd.
TruncPolyT<LaurentPoly> spinor_character_equivariant(const RootBundle& w, int m);

/// Cohomology-valued q-series (non-equivariant CohomClassQ).
using CohomSeries = QSeries<TruncPoly>;

/// ch of U_V = (x)_{n>=1} S_{q^n}(TM~ (x) C) (x) Lambda_{-1}(V*) (x)
/// (x)_{n>=1} Lambda_{-q^n}(V~ (x) C), truncated at q^order.
CohomSeries twist_UV(const RootBundle& tm, const RootBundle& v, int m, int order);
/// ch of U_{V,W} = U_V (x) Delta(W~) (x) (x)_{n>=1} Lambda_{q^n}(W~ (x) C).
CohomSeries twist_UVW(const RootBundle& tm, const RootBundle& v, const RootBundle& w, int m, int order);

/// Total Pontrjagin class data 1 + sum_j p[j-1] x^{2j} for a ring of
/// dimension m. p has floor(m/2) entries.
struct PontrjaginCandidate {
  int m = 0;
  std::vector<Rational> p;

  static PontrjaginCandidate standard(int m);  // (1 + x^2)^{m+1}
  TruncPoly total_class() const;
  friend bool operator==(const PontrjaginCandidate&, const PontrjaginCandidate&) = default;
};

/// Multiplicative sequence of `genus` evaluated on the given Pontrjagin data
/// (no splitting needed: goes through power sums of the squared roots).
TruncPoly class_from_pontrjagin(Genus genus, const PontrjaginCandidate& p);
/// Inverse of class_from_pontrjagin; the class must have constant term 1 and
/// vanishing odd coefficients.
PontrjaginCandidate pontrjagin_from_class(Genus genus, const TruncPoly& cls);

/// log of a class with constant term 1.
TruncPoly log_unipotent(const TruncPoly& a);

}  // namespace cprig
