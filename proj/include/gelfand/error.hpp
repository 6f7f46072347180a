#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gelfand {

enum class ErrorCode {
  NotPrime,
  ModulusReducible,
  ModulusNotMonic,
  DivisionByZero,
  FieldMismatch,
  NotSquarefree,
  NotMonic,
  SingularInput,
  DimensionMismatch,
  TooLarge,
  NotSigmaSymmetric,
  NotSemisimple,
  DegenerateForm,
  OddEDimension,
  ZeroInput,
  InvalidInput,
  InvariantViolation,
  CounterexampleFound,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Upper bound on any group or table materialized by the library.
struct ResourceLimits {
  std::uint64_t max_group_size = 100'000'000;
};

// Multiplication that reports overflow as TooLarge instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace gelfand
