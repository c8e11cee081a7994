#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cprig/fixed_points.hpp"
#include "cprig/global_index.hpp"
#include "cprig/report.hpp"

namespace cprig {

using Complex = std::complex<double>;

struct ModularPoint {
  Complex tau;
  Complex z;

  static ModularPoint make(Complex tau, Complex z);
};

struct NumericPolicy {
  /// Pass threshold for relative residuals; the product is truncated so its
  /// own relative error stays below tolerance/10.
  double tolerance = 1e-9;
  int maxProductTerms = 4000;
  /// Minimum distance of w*z to the lattice before FY_eval refuses.
  double poleDistance = 1e-7;
  /// Allowed relative gap between the scanned sum and the exact series.
  double sumTolerance = 1e-6;
};

/// Product length and the resulting relative-error bound.
struct Truncation {
  int terms = 0;
  double tailBound = 0;
};

/// Smallest N with e^eps - 1 <= tolerance/10, where
/// eps = (2R+2)|q|^{N+1} / ((1-|q|)(1 - |q|^{N+1} R)), R = max(|lambda|, 1/|lambda|).
/// TailBoundViolation when N would exceed the policy cap.
Truncation choose_truncation(Complex tau, Complex z, const NumericPolicy& policy);

/// Phi(tau, z) with lambda^{1/2} = e^{pi i z}.
Complex phi_eval(const ModularPoint& p, const NumericPolicy& policy, Truncation* used = nullptr);

/// |a - b| / max(|a|, |b|), or |a - b| when both are tiny.
double relative_residual(Complex a, Complex b);

VerificationReport lattice_shift_check(const ModularPoint& p, long alpha, long beta, const NumericPolicy& policy);

struct SL2Z {
  long a = 1, b = 0, c = 0, d = 1;
  static SL2Z S() { return {0, -1, 1, 0}; }
  static SL2Z T() { return {1, 1, 0, 1}; }
  friend SL2Z operator*(const SL2Z& x, const SL2Z& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

VerificationReport modular_check(const ModularPoint& p, const SL2Z& A, const NumericPolicy& policy);

/// Distance of w to the lattice Z tau + Z.
double lattice_distance(Complex tau, Complex w);

/// prod_{m != 0} 1/Phi(tau, m z) * prod_{s != 0} Phi(tau, s z).
/// PoleProximity when some m z is within policy.poleDistance of the lattice.
Complex FY_eval(const std::vector<long>& tangentWeights, const std::vector<long>& vWeights, const ModularPoint& p,
                const NumericPolicy& policy);

/// 1/2 (sum s^2 - sum m^2) of the weights as given; all must be even.
long fy_index(const std::vector<long>& tangentWeights, const std::vector<long>& vWeights);

/// F(tau, z + alpha tau + beta) = F(tau, z) e^{-2 pi i I (alpha^2 tau + 2 alpha z)}.
VerificationReport fy_index_law_check(const std::vector<long>& tangentWeights, const std::vector<long>& vWeights,
                                      const ModularPoint& p, long alpha, long beta, const NumericPolicy& policy);

/// Exact q-expansion of phi in mu = lambda^{1/2} up to q^order.
QSeries<LaurentPoly> phi_exact_series(int order);

/// phi_exact_series evaluated at mu = e^{pi i z} against phi_eval; the
/// allowed gap is the majorant bound on the omitted q-powers plus the
/// product tail bound.
VerificationReport phi_series_cross_check(const ModularPoint& p, int order, const NumericPolicy& policy);

struct ScanSample {
  double z = 0;
  Complex value;
};

struct ScanResult {
  std::vector<ScanSample> samples;
  VerificationReport report;
};

/// Sum over isolated components of e^{pi i (l - sum s) z} F_Y(tau, z) on
/// z_k = (k + theta)/points, k = 0..points-1, with theta irrational; then
/// the same on a 10x finer grid. Passes when the refined maximum grows by at
/// most growthTolerance and, if order >= 0, the sum matches the exact
/// Lefschetz series evaluated at lambda = e^{2 pi i z}.
ScanResult real_line_pole_scan(const FixedPointData& data, const SpincData& spinc, Complex tau, int points,
                               const NumericPolicy& policy, double growthTolerance = 0.05, int exactOrder = -1);

/// z,re,im,abs rows.
std::string scan_csv(const std::vector<ScanSample>& samples);

}  // namespace cprig
