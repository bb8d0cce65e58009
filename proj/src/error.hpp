#pragma once

#include <stdexcept>
#include <string>

namespace pqclab {

enum class ErrorCode {
  InvalidArgument,
  DivisionByZero,
  Singular,
  DecodingFailure,
  StreamExhausted,
  RejectionLimit,
  Format,
  Io,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void throw_error(ErrorCode code, const std::string& what);

// Contract checks stay enabled in release builds; every caller of the
// public surface gets an exception rather than undefined behaviour.
#define PQCLAB_EXPECTS(cond, msg)                                    \
  do {                                                               \
    if (!(cond)) ::pqclab::throw_error(::pqclab::ErrorCode::InvalidArgument, msg); \
  } while (0)

}  // namespace pqclab
