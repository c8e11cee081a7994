#include "cprig/global_index.hpp"

#include <algorithm>
#include <optional>

namespace cprig {

SpincData SpincData::make(int m, long c1) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "negative dimension");
  if (((c1 - (m + 1)) % 2 + 2) % 2 != 0)
    fail(ErrorCode::InvalidArgument, "c1 = " + std::to_string(c1) + " is not characteristic for m = " + std::to_string(m));
  return SpincData{m, c1};
}

TruncPoly standard_aroof(int m) { return multiplicative_class(Genus::AHat, cpm_tangent(m), m); }

Rational index_twisted(const SpincData& spinc, const RootBundle& v) {
  return index_twisted(spinc, standard_aroof(spinc.m), chern_character(v, spinc.m));
}

Rational index_twisted(const SpincData& spinc, const TruncPoly& aroof, const TruncPoly& chV) {
  return pair_fundamental(exp_x(spinc.m, Rational(spinc.c1) / 2) * aroof * chV);
}

QSeries<Rational> index_series(const SpincData& spinc, const CohomSeries& twist) {
  return index_series(spinc, standard_aroof(spinc.m), twist);
}

QSeries<Rational> index_series(const SpincData& spinc, const TruncPoly& aroof, const CohomSeries& twist) {
  const TruncPoly base = exp_x(spinc.m, Rational(spinc.c1) / 2) * aroof;
  return map_coefficients(twist, [&](const TruncPoly& t) { return pair_fundamental(base * t); });
}

namespace {

TruncPoly aroof_with_p1(int m, long b, const Rational& higherShift) {
  auto cand = PontrjaginCandidate::standard(m);
  cand.p[0] = b;
  for (std::size_t j = 1; j < cand.p.size(); ++j) cand.p[j] += higherShift * static_cast<long>(j + 1);
  return class_from_pontrjagin(Genus::AHat, cand);
}

long mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

Rational mod24_index(int m, long b, const Rational& higherShift) {
  if (m < 3) fail(ErrorCode::DimensionTooSmall, "mod-24 argument needs m >= 3");
  const auto spinc = SpincData::standard(m);
  return index_twisted(spinc, aroof_with_p1(m, b, higherShift), chern_character(gamma_minus_one_power(m - 2), m));
}

Rational mod24_q(int m) {
  if (m < 3) fail(ErrorCode::DimensionTooSmall, "mod-24 argument needs m >= 3");
  const TruncPoly one = TruncPoly::constant(m, Rational(1));
  return pair_fundamental(exp_x(m, make_rational(m + 1, 2)) * pow(exp_x(m, Rational(1)) - one, m - 2));
}

VerificationReport mod24_check(int m, long bLow, long bHigh) {
  if (m < 3) fail(ErrorCode::DimensionTooSmall, "mod-24 argument needs m >= 3");
  if (bLow > bHigh) fail(ErrorCode::InvalidArgument, "empty b range");
  const Rational q = mod24_q(m);
  Json rows = Json::array();
  Json bad = Json::array();
  std::vector<long> integralResidues, integralB;
  bool higherIndependent = true;
  for (long b = bLow; b <= bHigh; ++b) {
    const Rational idx = mod24_index(m, b);
    const Rational perturbed = mod24_index(m, b, Rational(7, 3));
    if (perturbed != idx) higherIndependent = false;
    const bool integral = is_integer(idx);
    const bool expected = mod(b - (m + 1), 24) == 0;
    const bool closedForm = idx == q - Rational(b) / 24;
    rows.push_back(Json{{"b", b}, {"index", to_json(idx)}, {"bOver24MinusQ", to_json(Rational(-idx))}, {"integral", integral}});
    if (integral != expected || !closedForm)
      bad.push_back(Json{{"b", b}, {"index", to_json(idx)}, {"integral", integral}, {"expectedIntegral", expected}, {"matchesQMinusBOver24", closedForm}});
    if (integral) {
      integralB.push_back(b);
      const long r = mod(b, 24);
      if (std::find(integralResidues.begin(), integralResidues.end(), r) == integralResidues.end()) integralResidues.push_back(r);
    }
  }
  const bool ok = bad.empty() && higherIndependent;
  Json witness = nullptr;
  if (!ok) witness = Json{{"mismatches", bad}, {"higherClassIndependent", higherIndependent}};
  std::sort(integralResidues.begin(), integralResidues.end());
  Json value{{"Q", to_json(q)},
             {"higherClassIndependent", higherIndependent},
             {"integralB", integralB},
             {"integralResiduesMod24", integralResidues},
             {"rows", rows}};
  return make_report("mod24", ok, Json{{"m", m}, {"bLow", bLow}, {"bHigh", bHigh}}, witness, value);
}

std::vector<Rational> rigidity_relations(int m, const TruncPoly& aroof) {
  if (m < 3) fail(ErrorCode::DimensionTooSmall, "rigidity relations need m >= 3");
  if (aroof.m() != m) fail(ErrorCode::InvalidArgument, "Ahat lives in a different ring");
  const TruncPoly ep = exp_x(m, make_rational(1, 2));
  const TruncPoly em = exp_x(m, make_rational(-1, 2));
  const TruncPoly base = aroof * (exp_x(m, Rational(1)) - exp_x(m, Rational(-1)));
  std::vector<Rational> out;
  for (int k = 0; 2 * k <= m - 3; ++k) out.push_back(pair_fundamental(base * pow(ep - em, m - 3 - 2 * k) * pow(ep + em, 2 * k)));
  return out;
}

VerificationReport rigidity_report(int m) {
  const TruncPoly a = standard_aroof(m);
  const auto standard = rigidity_relations(m, a);
  const auto perturbed = rigidity_relations(m, a + TruncPoly::x_power(m, 2));
  bool zero = true, violated = false;
  for (const auto& r : standard) zero = zero && is_zero(r);
  for (const auto& r : perturbed) violated = violated || !is_zero(r);
  const bool ok = zero && violated;
  Json witness = nullptr;
  if (!ok) witness = Json{{"standardAllZero", zero}, {"perturbationDetected", violated}, {"standard", to_json(standard)}};
  return make_report("rigidity", ok, Json{{"m", m}, {"perturbation", "x^2"}}, witness,
                     Json{{"relations", to_json(standard)}, {"perturbed", to_json(perturbed)}});
}

namespace {

struct AffineSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace;
  int rank = 0;
};

/// Solves M t = rhs exactly by reduced row echelon form.
std::optional<AffineSolution> solve_affine(std::vector<std::vector<Rational>> M, std::vector<Rational> rhs, int cols) {
  const int rows = static_cast<int>(M.size());
  std::vector<int> pivotCol;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && is_zero(M[p][c])) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = 1 / M[r][c];
    for (int j = 0; j < cols; ++j) M[r][j] *= inv;
    rhs[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(M[i][c])) continue;
      const Rational f = M[i][c];
      for (int j = 0; j < cols; ++j) M[i][j] -= f * M[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivotCol.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!is_zero(rhs[i])) return std::nullopt;
  AffineSolution s;
  s.rank = r;
  s.particular.assign(cols, Rational(0));
  for (int i = 0; i < r; ++i) s.particular[pivotCol[i]] = rhs[i];
  for (int c = 0; c < cols; ++c) {
    if (std::find(pivotCol.begin(), pivotCol.end(), c) != pivotCol.end()) continue;
    std::vector<Rational> v(cols);
    v[c] = 1;
    for (int i = 0; i < r; ++i) v[pivotCol[i]] = -M[i][c];
    s.nullspace.push_back(std::move(v));
  }
  return s;
}

TruncPoly aroof_from_components(int m, const std::vector<Rational>& a) {
  auto t = TruncPoly::constant(m, Rational(1));
  for (std::size_t j = 0; j < a.size(); ++j) t[2 * static_cast<int>(j + 1)] = a[j];
  return t;
}

Rational signature_of(int m, const std::vector<Rational>& a) {
  const auto p = pontrjagin_from_class(Genus::AHat, aroof_from_components(m, a));
  return pair_fundamental(class_from_pontrjagin(Genus::L, p));
}

std::vector<Rational> along(const std::vector<Rational>& base, const std::vector<Rational>& dir, const Rational& t) {
  auto out = base;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += t * dir[i];
  return out;
}

}  // namespace

ReconstructionResult reconstruct_pontrjagin(int m) {
  if (m < 3) fail(ErrorCode::DimensionTooSmall, "reconstruction needs m >= 3");
  const int h = m / 2;
  const std::vector<Rational> zeros(h);
  const auto r0 = rigidity_relations(m, aroof_from_components(m, zeros));
  const int nrel = static_cast<int>(r0.size());

  std::vector<std::vector<Rational>> M(nrel, std::vector<Rational>(h));
  std::vector<Rational> rhs(nrel);
  for (int i = 0; i < nrel; ++i) rhs[i] = -r0[i];
  for (int j = 0; j < h; ++j) {
    auto e = zeros;
    e[j] = 1;
    const auto rj = rigidity_relations(m, aroof_from_components(m, e));
    for (int i = 0; i < nrel; ++i) M[i][j] = rj[i] - r0[i];
  }
  const auto sol = solve_affine(M, rhs, h);
  if (!sol) fail(ErrorCode::NoSolution, "rigidity relations are inconsistent");

  ReconstructionResult res;
  res.unknowns = h;
  res.relationRank = sol->rank;
  res.residualAfterRelations = h - sol->rank;

  // Signature is 1 in even dimension and 0 in odd dimension.
  const Rational target = m % 2 == 0 ? 1 : 0;
  std::vector<Rational> a = sol->particular;
  if (sol->nullspace.empty()) {
    if (signature_of(m, a) != target) fail(ErrorCode::NoSolution, "unique solution violates the signature condition");
    res.residualAfterSignature = 0;
  } else if (sol->nullspace.size() == 1) {
    const auto& d = sol->nullspace[0];
    const Rational f0 = signature_of(m, along(a, d, 0));
    const Rational f1 = signature_of(m, along(a, d, 1));
    const Rational f2 = signature_of(m, along(a, d, 2));
    const Rational f3 = signature_of(m, along(a, d, 3));
    if (f2 - 2 * f1 + f0 != 0 || f3 - 3 * f2 + 3 * f1 - f0 != 0)
      fail(ErrorCode::UnderdeterminedSystem, "signature is not affine along the residual direction");
    const Rational slope = f1 - f0;
    if (is_zero(slope)) {
      if (f0 != target) fail(ErrorCode::NoSolution, "signature condition cannot be met");
      fail(ErrorCode::UnderdeterminedSystem, "signature does not constrain the residual direction");
    }
    a = along(a, d, (target - f0) / slope);
    res.signatureUsed = true;
    res.residualAfterSignature = 0;
  } else {
    fail(ErrorCode::UnderdeterminedSystem,
         "residual dimension " + std::to_string(sol->nullspace.size()) + " after relations exceeds what the signature can fix");
  }
  res.aroof = aroof_from_components(m, a);
  res.p = pontrjagin_from_class(Genus::AHat, res.aroof);
  return res;
}

VerificationReport reconstruct_report(int m) {
  const auto res = reconstruct_pontrjagin(m);
  const auto expected = PontrjaginCandidate::standard(m);
  const bool residualOk = res.residualAfterSignature == 0;
  const bool ok = res.p == expected && residualOk;
  Json stages{{"unknowns", res.unknowns},
              {"relationRank", res.relationRank},
              {"residualAfterRelations", res.residualAfterRelations},
              {"signatureUsed", res.signatureUsed},
              {"residualAfterSignature", res.residualAfterSignature}};
  Json witness = nullptr;
  if (!ok) witness = Json{{"solution", to_json(res.p.p)}, {"expected", to_json(expected.p)}};
  return make_report("reconstruct", ok, Json{{"m", m}}, witness, Json{{"p", to_json(res.p.p)}, {"stages", stages}});
}

}  // namespace cprig
