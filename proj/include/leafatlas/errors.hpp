#pragma once

#include <stdexcept>
#include <string>

namespace leafatlas {

enum class ErrorCode {
  InvalidLabel,
  DimensionMismatch,
  BoundExceeded,
  MissingKernel,
  NotBijective,
  NotIsometry,
  NotNilpotent,
  Infeasible,
  TargetThetaNotIsometry,
  DegenerateComplement,
  NotMinimalRep,
  SimplifiedPathUnavailable,
  ThetaMinusOneSingular,
  NonCommensurableLattices,
  SubalgebraNotPreserved,
  NotInLevi,
  NotTypeA,
  InvalidInput,
  InvariantViolation,
};

const char* error_name(ErrorCode c);

// Input problems map to exit code 2, broken internal invariants to 3.
bool is_internal(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace leafatlas
