#include "heatinv/metric_spec.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "heatinv/error.hpp"

namespace heatinv {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  raise(ErrorCode::SchemaError, path + ": " + what);
}

void allowOnly(const json& j, const std::set<std::string>& keys) {
  for (const auto& [key, _] : j.items()) {
    if (!keys.contains(key)) schema("$." + key, "unknown field");
  }
}

Rational rationalField(const json& j, const std::string& key, std::optional<Rational> fallback) {
  const std::string path = "$." + key;
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    schema(path, "missing required field");
  }
  if (!j[key].is_string()) schema(path, "expected a rational string \"p/q\"");
  auto q = parseRational(j[key].get<std::string>());
  if (!q) schema(path, "not a rational: \"" + j[key].get<std::string>() + "\"");
  return *q;
}

MetricSpec parseJet(const json& j) {
  allowOnly(j, {"kind", "order", "coeffs"});
  MetricSpec spec;
  spec.kind = MetricKind::Jet;
  if (!j.contains("order") || !j["order"].is_number_integer()) schema("$.order", "expected an integer");
  spec.declaredOrder = j["order"].get<int>();
  if (spec.declaredOrder < 0) schema("$.order", "must be nonnegative");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) schema("$.coeffs", "expected an array");

  std::set<std::pair<int, int>> seen;
  bool hasConstant = false;
  for (std::size_t i = 0; i < j["coeffs"].size(); ++i) {
    const auto& e = j["coeffs"][i];
    const std::string path = "$.coeffs[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 3) schema(path, "expected [a, b, \"p/q\"]");
    if (!e[0].is_number_integer() || !e[1].is_number_integer()) schema(path, "exponents must be integers");
    if (!e[2].is_string()) schema(path + "[2]", "expected a rational string or \"*\"");
    JetEntry entry{e[0].get<int>(), e[1].get<int>(), std::nullopt};
    if (entry.a < 0 || entry.b < 0) schema(path, "exponents must be nonnegative");
    if (entry.a + entry.b > spec.declaredOrder) {
      raise(ErrorCode::InvalidMetric, path + ": degree " + std::to_string(entry.a + entry.b) +
                                          " exceeds the declared order " + std::to_string(spec.declaredOrder));
    }
    if (!seen.insert({entry.a, entry.b}).second) raise(ErrorCode::InvalidMetric, path + ": duplicate coefficient");
    const std::string text = e[2].get<std::string>();
    if (text != "*") {
      entry.value = parseRational(text);
      if (!entry.value) schema(path + "[2]", "not a rational: \"" + text + "\"");
    }
    if (entry.a == 0 && entry.b == 0) {
      if (entry.value && sgn(*entry.value) == 0) raise(ErrorCode::InvalidMetric, path + ": constant term is zero");
      hasConstant = true;
    }
    spec.entries.push_back(std::move(entry));
  }
  if (!hasConstant) raise(ErrorCode::InvalidMetric, "$.coeffs: constant term rho(0,0) is missing");
  return spec;
}

}  // namespace

std::string_view kindName(MetricKind kind) {
  switch (kind) {
    case MetricKind::Jet: return "jet";
    case MetricKind::Flat: return "flat";
    case MetricKind::SphereStereographic: return "sphereStereographic";
    case MetricKind::ReciprocalLinear: return "reciprocalLinear";
  }
  return "unknown";
}

bool MetricSpec::hasPlaceholders() const {
  for (const auto& e : entries) {
    if (!e.value) return true;
  }
  return false;
}

std::optional<int> MetricSpec::maxOrder() const {
  if (kind == MetricKind::Jet) return declaredOrder;
  return std::nullopt;
}

MetricSpec parseMetricSpec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    schema("$", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) schema("$", "expected an object");
  if (!j.contains("kind") || !j["kind"].is_string()) schema("$.kind", "expected a string");
  const std::string kind = j["kind"].get<std::string>();

  if (kind == "jet") return parseJet(j);
  MetricSpec spec;
  if (kind == "flat") {
    allowOnly(j, {"kind", "c"});
    spec.kind = MetricKind::Flat;
    spec.c = rationalField(j, "c", Rational(1));
    if (sgn(spec.c) <= 0) raise(ErrorCode::InvalidMetric, "$.c: conformal factor must be positive");
  } else if (kind == "sphereStereographic") {
    allowOnly(j, {"kind", "R"});
    spec.kind = MetricKind::SphereStereographic;
    spec.radius = rationalField(j, "R", std::nullopt);
    if (sgn(spec.radius) <= 0) raise(ErrorCode::InvalidMetric, "$.R: radius must be positive");
  } else if (kind == "reciprocalLinear") {
    allowOnly(j, {"kind", "a0", "a1", "a2"});
    spec.kind = MetricKind::ReciprocalLinear;
    spec.a0 = rationalField(j, "a0", std::nullopt);
    spec.a1 = rationalField(j, "a1", Rational(0));
    spec.a2 = rationalField(j, "a2", Rational(0));
    if (sgn(spec.a0) == 0) raise(ErrorCode::InvalidMetric, "$.a0: must be nonzero");
  } else {
    schema("$.kind", "unknown kind \"" + kind + "\"");
  }
  return spec;
}

MetricSpec loadMetricSpec(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) raise(ErrorCode::SchemaError, "cannot read metric file " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseMetricSpec(buffer.str());
}

Jet2D<Rational> expandNumeric(const MetricSpec& spec, int order) {
  using Jet = Jet2D<Rational>;
  switch (spec.kind) {
    case MetricKind::Jet: {
      if (spec.hasPlaceholders()) raise(ErrorCode::InvalidMetric, "jet has symbolic placeholders; use symbolic mode");
      Jet rho(std::min(order, spec.declaredOrder));
      for (const auto& e : spec.entries) rho.accumulate(e.a, e.b, *e.value);
      return rho;
    }
    case MetricKind::Flat: return Jet::constant(spec.c, order);
    case MetricKind::SphereStereographic: {
      // 4 R^2 / (1 + r^2)^2 = 4 R^2 sum_j (j + 1) (-r^2)^j
      Jet rho(order);
      const Rational scale = 4 * spec.radius * spec.radius;
      for (int j = 0; 2 * j <= order; ++j) {
        const Rational c = scale * (j + 1) * (j % 2 == 0 ? 1 : -1);
        for (int i = 0; i <= j; ++i) rho.accumulate(2 * i, 2 * (j - i), c * Rational(binomial(j, i)));
      }
      return rho;
    }
    case MetricKind::ReciprocalLinear: {
      Jet linear(order);
      linear.accumulate(0, 0, spec.a0);
      linear.accumulate(1, 0, spec.a1);
      linear.accumulate(0, 1, spec.a2);
      return inverse(linear);
    }
  }
  raise(ErrorCode::InvalidMetric, "unknown metric kind");
}

Jet2D<RhoPoly> expandSymbolic(const MetricSpec& spec, int order) {
  if (spec.kind != MetricKind::Jet) {
    raise(ErrorCode::InvalidMetric,
          "symbolic mode takes a jet spec (use \"*\" for symbolic coefficients), not " + std::string(kindName(spec.kind)));
  }
  Jet2D<RhoPoly> rho(std::min(order, spec.declaredOrder));
  for (const auto& e : spec.entries) {
    rho.accumulate(e.a, e.b, e.value ? RhoPoly(*e.value) : RhoPoly::variable(e.a, e.b));
  }
  return rho;
}

}  // namespace heatinv
