#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pellred {

enum class ErrorKind {
  ParseError,
  NotIntegral,
  InexactDivision,
  DimensionMismatch,
  ZeroD,
  OddIndexUndefined,
  PreconditionViolated,
  NotASolution,
  UnsupportedD,
  IrrationalNormalizer,
  ZeroR,
  NotPrime,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Domain error raised by every pellred operation. The CLI reports
/// error_name(kind()) on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::ParseError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pellred
