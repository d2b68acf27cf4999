#include "hitchin/errors.hpp"

namespace hf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddMultiplicity: return "OddMultiplicity";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::OddCuspCount: return "OddCuspCount";
    case ErrorCode::TruncationTooShort: return "TruncationTooShort";
    case ErrorCode::ShiftOutOfWindow: return "ShiftOutOfWindow";
    case ErrorCode::NotLarger: return "NotLarger";
    case ErrorCode::DivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorCode::CompatibilityFailure: return "CompatibilityFailure";
    case ErrorCode::InvariantFailure: return "InvariantFailure";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hf
