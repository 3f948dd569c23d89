#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edm {

enum class ErrorCode {
  NonFinite,
  DegenerateMetric,
  NoRealRoot,
  ScalarFlat,
  NoRealWK,
  SignUndefined,
  ZeroLambda,
  PoleAtZero,
  PoleOfPsi,
  NoConvergence,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every library operation. The code is stable and is
/// what the CLI and the Python bindings report.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace edm
