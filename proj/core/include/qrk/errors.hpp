#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrk {

enum class ErrorCode {
  ZeroVector,
  DimensionMismatch,
  NonFiniteAngle,
  NotOrthonormal,
  NotOrthogonal,
  InvalidHypergraph,
  InvalidConstraint,
  UnknownAtom,
  DuplicateAtom,
  LabelConflict,
  MissingLabel,
  ContextSizeMismatch,
  PreconditionViolated,
  BlockTooLong,
  StreamTooShort,
  EmptyStream,
  UnsupportedBase,
  ParseError,
  IoError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qrk
