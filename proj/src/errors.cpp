#include "causal2d/errors.hpp"

namespace causal2d {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::ZeroPeriod: return "ZeroPeriod";
    case ErrorCode::DirectionMismatch: return "DirectionMismatch";
    case ErrorCode::NotQuasiPeriodic: return "NotQuasiPeriodic";
    case ErrorCode::InvalidQuasiPeriod: return "InvalidQuasiPeriod";
    case ErrorCode::NotNormalizing: return "NotNormalizing";
    case ErrorCode::Unrepresentable: return "Unrepresentable";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateJacobian: return "DegenerateJacobian";
    case ErrorCode::ImageOffGrid: return "ImageOffGrid";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

}  // namespace causal2d
