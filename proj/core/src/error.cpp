#include "posetcut/error.hpp"

namespace posetcut {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ReflexivePair: return "ReflexivePair";
    case ErrorCode::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorCode::TransitivityViolation: return "TransitivityViolation";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::IdOutOfRange: return "IdOutOfRange";
    case ErrorCode::NotARelation: return "NotARelation";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ChainTooShort: return "ChainTooShort";
    case ErrorCode::AlreadyAntichain: return "AlreadyAntichain";
    case ErrorCode::ProfileViolation: return "ProfileViolation";
    case ErrorCode::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

bool is_axiom_violation(ErrorCode code) {
  return code == ErrorCode::ReflexivePair ||
         code == ErrorCode::AntisymmetryViolation ||
         code == ErrorCode::TransitivityViolation ||
         code == ErrorCode::CycleDetected;
}

}  // namespace posetcut
