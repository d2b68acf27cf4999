#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hf {

enum class ErrorCode {
  OddMultiplicity,
  DegreeMismatch,
  OddCuspCount,
  TruncationTooShort,
  ShiftOutOfWindow,
  NotLarger,
  DivisionByNonUnit,
  CompatibilityFailure,
  InvariantFailure,
  Validation,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by request validation; `path` is a JSON pointer to the offending field.
class ValidationError : public Error {
 public:
  ValidationError(std::string path, const std::string& message)
      : Error(ErrorCode::Validation, path + ": " + message), path_(std::move(path)), detail_(message) {}

  const std::string& path() const noexcept { return path_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string path_;
  std::string detail_;
};

}  // namespace hf
