#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heatinv {

enum class ErrorCode {
  NonInvertibleConstantTerm,
  OrderExhausted,
  IndexOutOfRange,
  DegenerateCurvatureCoordinates,
  SingularFrame,
  SchemaError,
  InvalidMetric,
  TailNotConverged,
  IllConditionedFit,
};

std::string_view codeName(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status and a machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace heatinv
