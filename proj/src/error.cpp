#include "heatinv/error.hpp"

namespace heatinv {

std::string_view codeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
    case ErrorCode::OrderExhausted: return "OrderExhausted";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegenerateCurvatureCoordinates: return "DegenerateCurvatureCoordinates";
    case ErrorCode::SingularFrame: return "SingularFrame";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvalidMetric: return "InvalidMetric";
    case ErrorCode::TailNotConverged: return "TailNotConverged";
    case ErrorCode::IllConditionedFit: return "IllConditionedFit";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(codeName(code)) + ": " + message), code_(code) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace heatinv
