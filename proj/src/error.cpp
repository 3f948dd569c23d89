#include "edm/error.hpp"

namespace edm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DegenerateMetric: return "DegenerateMetric";
    case ErrorCode::NoRealRoot: return "NoRealRoot";
    case ErrorCode::ScalarFlat: return "ScalarFlat";
    case ErrorCode::NoRealWK: return "NoRealWK";
    case ErrorCode::SignUndefined: return "SignUndefined";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::PoleAtZero: return "PoleAtZero";
    case ErrorCode::PoleOfPsi: return "PoleOfPsi";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace edm
