#include "liftcover/error.hpp"

namespace liftcover {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::ModulusMismatch: return "modulus mismatch";
    case ErrorCode::NotSymplectic: return "not symplectic";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::IndexOutOfRange: return "index out of range";
    case ErrorCode::Syntax: return "syntax error";
    case ErrorCode::NotLiftable: return "not liftable";
    case ErrorCode::NotUnit: return "not a unit";
    case ErrorCode::NonConvergence: return "no convergence";
    case ErrorCode::CapExceeded: return "state cap exceeded";
    case ErrorCode::Defect: return "internal check failed";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorCode::Syntax,
            message + " at position " + std::to_string(position)),
      position_(position) {}

CapExceededError::CapExceededError(std::size_t states_seen, std::size_t cap)
    : Error(ErrorCode::CapExceeded,
            "orbit enumeration exceeded the cap of " + std::to_string(cap) +
                " states (" + std::to_string(states_seen) + " seen)"),
      states_seen_(states_seen),
      cap_(cap) {}

}  // namespace liftcover
