#include "qrk/errors.hpp"

namespace qrk {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteAngle: return "NonFiniteAngle";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::InvalidHypergraph: return "InvalidHypergraph";
    case ErrorCode::InvalidConstraint: return "InvalidConstraint";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::DuplicateAtom: return "DuplicateAtom";
    case ErrorCode::LabelConflict: return "LabelConflict";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::ContextSizeMismatch: return "ContextSizeMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BlockTooLong: return "BlockTooLong";
    case ErrorCode::StreamTooShort: return "StreamTooShort";
    case ErrorCode::EmptyStream: return "EmptyStream";
    case ErrorCode::UnsupportedBase: return "UnsupportedBase";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace qrk
