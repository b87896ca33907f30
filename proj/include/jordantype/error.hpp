#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jt {

enum class ErrorCode {
  InvalidArgs,
  WeightMismatch,
  EmptyPartition,
  NotNilpotent,
  SyntaxError,
  UnknownVariable,
  NotHomogeneous,
  NotArtinian,
  NonUnitConstants,
  A0NotField,
  NotInMaximalIdeal,
  EmptySubspace,
  IncomparableSamples,
  TooLarge,
  InvalidSpec,
  InternalInconsistency,
  StabilityViolation,
};

const char* error_code_name(ErrorCode code);

// Internal codes signal a library fault rather than bad input.
inline bool is_internal(ErrorCode code) {
  return code == ErrorCode::InternalInconsistency || code == ErrorCode::StabilityViolation;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              "syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace jt
