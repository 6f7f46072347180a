#include "gelfand/error.hpp"

namespace gelfand {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ModulusReducible: return "ModulusReducible";
    case ErrorCode::ModulusNotMonic: return "ModulusNotMonic";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotSigmaSymmetric: return "NotSigmaSymmetric";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::OddEDimension: return "OddEDimension";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
  }
  return "Unknown";
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::TooLarge, "integer overflow in group order");
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace gelfand
