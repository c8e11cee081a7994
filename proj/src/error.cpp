#include "cprig/error.hpp"

namespace cprig {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::NonNilpotentInput: return "NonNilpotentInput";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case ErrorCode::UnpairedRoots: return "UnpairedRoots";
    case ErrorCode::OddHalfWeight: return "OddHalfWeight";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::UnderdeterminedSystem: return "UnderdeterminedSystem";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::DuplicateWeights: return "DuplicateWeights";
    case ErrorCode::ZeroNormalWeight: return "ZeroNormalWeight";
    case ErrorCode::NonIntegralIndex: return "NonIntegralIndex";
    case ErrorCode::MissingNormalization: return "MissingNormalization";
    case ErrorCode::InvalidFixedPointData: return "InvalidFixedPointData";
    case ErrorCode::TailBoundViolation: return "TailBoundViolation";
    case ErrorCode::MatrixNotUnimodular: return "MatrixNotUnimodular";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::FixtureParseError: return "FixtureParseError";
    case ErrorCode::PoleSurvivesReduction: return "PoleSurvivesReduction";
    case ErrorCode::CancellationFailure: return "CancellationFailure";
    case ErrorCode::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace cprig
