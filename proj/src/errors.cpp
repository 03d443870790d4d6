#include "leafatlas/errors.hpp"

namespace leafatlas {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::MissingKernel: return "MissingKernel";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::TargetThetaNotIsometry: return "TargetThetaNotIsometry";
    case ErrorCode::DegenerateComplement: return "DegenerateComplement";
    case ErrorCode::NotMinimalRep: return "NotMinimalRep";
    case ErrorCode::SimplifiedPathUnavailable: return "SimplifiedPathUnavailable";
    case ErrorCode::ThetaMinusOneSingular: return "ThetaMinusOneSingular";
    case ErrorCode::NonCommensurableLattices: return "NonCommensurableLattices";
    case ErrorCode::SubalgebraNotPreserved: return "SubalgebraNotPreserved";
    case ErrorCode::NotInLevi: return "NotInLevi";
    case ErrorCode::NotTypeA: return "NotTypeA";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_internal(ErrorCode c) {
  return c == ErrorCode::DegenerateComplement || c == ErrorCode::InvariantViolation;
}

}  // namespace leafatlas
