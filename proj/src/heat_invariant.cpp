#include "heatinv/heat_invariant.hpp"

namespace heatinv {

std::string_view pathName(EvaluationPath path) {
  switch (path) {
    case EvaluationPath::Direct: return "eq311";
    case EvaluationPath::Resolvent: return "eq310";
    case EvaluationPath::Curvature: return "curvature";
  }
  return "unknown";
}

std::optional<EvaluationPath> parsePath(std::string_view name) {
  if (name == "eq311") return EvaluationPath::Direct;
  if (name == "eq310") return EvaluationPath::Resolvent;
  if (name == "curvature") return EvaluationPath::Curvature;
  return std::nullopt;
}

PiScaled substitute(const ClosedForm& form, const Jet2D<Rational>& rho) {
  return {substitute(form.poly, rho), form.piPower};
}

}  // namespace heatinv
