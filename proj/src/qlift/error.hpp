#pragma once

#include <stdexcept>
#include <string>

namespace qlift {

enum class ErrorCode {
  InvalidArgument = 1,
  OutOfRange,
  Pole,
  UndefinedAngle,
  Integration,
  Validity,
  Adiabaticity,
  AreaTooSmall,
  Config,
  Io,
  Numeric,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Step-size underflow inside the adaptive integrator.
class IntegrationError : public Error {
 public:
  IntegrationError(double tau, const std::string& message)
      : Error(ErrorCode::Integration, message), tau_(tau) {}
  double tau() const noexcept { return tau_; }

 private:
  double tau_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) fail(code, message);
}

}  // namespace qlift
