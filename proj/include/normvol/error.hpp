#pragma once

#include <stdexcept>
#include <string>

namespace normvol {

enum class ErrorCode {
  kInvalidArgument = 1,
  kFlatInput,
  kZeroVolume,
  kPolarUndefined,
  kSingularMap,
  kNotSymmetric,
  kSolverStall,
  kCertificateFailed,
  kInvalidFamily,
  kParse,
  kIo,
  kUnsupported,
};

const char* to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code survives
/// the trip through the C API as an `nv_status`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace normvol
