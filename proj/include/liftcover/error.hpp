#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liftcover {

enum class ErrorCode {
  DimensionMismatch,
  ModulusMismatch,
  NotSymplectic,
  InvalidArgument,
  IndexOutOfRange,
  Syntax,
  NotLiftable,
  NotUnit,
  NonConvergence,
  CapExceeded,
  Defect,
};

std::string_view to_string(ErrorCode code);

/// Structured failure raised by every operation in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Word-grammar failure; `position` is the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Breadth-first enumeration stopped at its state cap.
class CapExceededError : public Error {
 public:
  CapExceededError(std::size_t states_seen, std::size_t cap);

  std::size_t states_seen() const noexcept { return states_seen_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t states_seen_;
  std::size_t cap_;
};

}  // namespace liftcover
