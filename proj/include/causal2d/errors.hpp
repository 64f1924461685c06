#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace causal2d {

enum class ErrorCode {
  InvalidInput,
  EndpointMismatch,
  NotMonotone,
  ZeroPeriod,
  DirectionMismatch,
  NotQuasiPeriodic,
  InvalidQuasiPeriod,
  NotNormalizing,
  Unrepresentable,
  OutsideDomain,
  NotIncreasing,
  NoConvergence,
  DegenerateJacobian,
  ImageOffGrid,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace causal2d
