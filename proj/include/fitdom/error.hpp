#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fitdom {

enum class ErrorCode {
  DanglingReference,
  DuplicateId,
  SchemaViolation,
  InconsistentEigenvalueSigns,
  CyclicGraph,
  AmbiguousSide,
  NotInSPrime,
  IrrationalEigenvalue,
  ResonantStep,
  DomainError,
  NotSkeletonPath,
  NotSaddleConnectionChain,
  NotASaddle,
  NotTransversalSaddle,
  ValidationFailed,
  NotDistinguished,
  GoodSaturationsRequired,
  NoCrossing,
  StepLimitExceeded,
  InsufficientSamples,
  DegenerateCurve,
  ResonantInput,
  NonpositiveWeight,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::InconsistentEigenvalueSigns: return "InconsistentEigenvalueSigns";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::AmbiguousSide: return "AmbiguousSide";
    case ErrorCode::NotInSPrime: return "NotInSPrime";
    case ErrorCode::IrrationalEigenvalue: return "IrrationalEigenvalue";
    case ErrorCode::ResonantStep: return "ResonantStep";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotSkeletonPath: return "NotSkeletonPath";
    case ErrorCode::NotSaddleConnectionChain: return "NotSaddleConnectionChain";
    case ErrorCode::NotASaddle: return "NotASaddle";
    case ErrorCode::NotTransversalSaddle: return "NotTransversalSaddle";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::NotDistinguished: return "NotDistinguished";
    case ErrorCode::GoodSaturationsRequired: return "GoodSaturationsRequired";
    case ErrorCode::NoCrossing: return "NoCrossing";
    case ErrorCode::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::ResonantInput: return "ResonantInput";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fitdom
