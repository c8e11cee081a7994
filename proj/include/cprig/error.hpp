#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cprig {

/// Failure categories raised across the library. The CLI maps these onto
/// exit codes and report witnesses.
enum class ErrorCode {
  InvalidArgument,
  NonUnitConstantTerm,
  NonNilpotentInput,
  ZeroDenominator,
  PoleAtEvaluationPoint,
  UnpairedRoots,
  OddHalfWeight,
  DimensionTooSmall,
  UnderdeterminedSystem,
  NoSolution,
  DuplicateWeights,
  ZeroNormalWeight,
  NonIntegralIndex,
  MissingNormalization,
  InvalidFixedPointData,
  TailBoundViolation,
  MatrixNotUnimodular,
  PoleProximity,
  InfeasibleParams,
  FixtureParseError,
  PoleSurvivesReduction,
  CancellationFailure,
  CheckFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace cprig
