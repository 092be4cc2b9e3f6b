#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "heatinv/heat_invariant.hpp"

namespace heatinv {

enum class Format { Plain, Latex, Json };

std::optional<Format> parseFormat(std::string_view name);

/// A term of a closed form written in derivative values
/// rho_{u^a v^b} = d^(a+b) rho / du^a dv^b at the origin (= a! b! rho_ab).
/// `factors` is sorted by variable; only (0,0) may carry a negative exponent.
struct DerivativeTerm {
  std::vector<std::pair<Exponent2, int>> factors;
  Rational coeff;
};

/// Terms in the fixed display order: graded reverse lexicographic, descending,
/// over the variables rho, rho_u, rho_v, rho_uu, rho_uv, rho_vv, rho_uuu, ...
std::vector<DerivativeTerm> derivativeTerms(const RhoPoly& poly);

/// "rho", "rho_u", "rho_uv", ...
std::string derivativeName(Exponent2 var);

std::string renderClosedForm(const ClosedForm& form, Format fmt);
std::string renderNumeric(const PiScaled& value, Format fmt);
/// Dispatches on the result's form.
std::string render(const HeatInvariantResult& result, Format fmt);

nlohmann::json closedFormToJson(const ClosedForm& form);
/// Inverse of closedFormToJson. Throws Error(SchemaError) on malformed input.
ClosedForm closedFormFromJson(const nlohmann::json& j);

}  // namespace heatinv
