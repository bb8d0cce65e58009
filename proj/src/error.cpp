#include "error.hpp"

namespace pqclab {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::DivisionByZero: return "division by zero";
    case ErrorCode::Singular: return "singular matrix";
    case ErrorCode::DecodingFailure: return "decoding failure";
    case ErrorCode::StreamExhausted: return "byte stream exhausted";
    case ErrorCode::RejectionLimit: return "rejection sampling limit reached";
    case ErrorCode::Format: return "malformed encoding";
    case ErrorCode::Io: return "i/o failure";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

void throw_error(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace pqclab
