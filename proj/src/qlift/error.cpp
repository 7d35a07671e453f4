#include "qlift/error.hpp"

namespace qlift {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::UndefinedAngle: return "undefined-angle";
    case ErrorCode::Integration: return "integration-failure";
    case ErrorCode::Validity: return "validity";
    case ErrorCode::Adiabaticity: return "adiabaticity";
    case ErrorCode::AreaTooSmall: return "area-too-small";
    case ErrorCode::Config: return "config";
    case ErrorCode::Io: return "io";
    case ErrorCode::Numeric: return "numeric";
  }
  return "unknown";
}

}  // namespace qlift
