#include "heatinv/render.hpp"

#include <algorithm>
#include <map>

#include "heatinv/error.hpp"

namespace heatinv {

namespace {

int variableIndex(Exponent2 var) {
  const int d = var.degree();
  return d * (d + 1) / 2 + var.v;
}

Integer derivativeFactor(Exponent2 var) {
  return factorial(static_cast<unsigned>(var.u)) * factorial(static_cast<unsigned>(var.v));
}

int totalDegree(const DerivativeTerm& t) {
  int d = 0;
  for (const auto& f : t.factors) d += f.second;
  return d;
}

// true when a precedes b in descending graded reverse lexicographic order.
bool grevlexBefore(const DerivativeTerm& a, const DerivativeTerm& b) {
  const int da = totalDegree(a);
  const int db = totalDegree(b);
  if (da != db) return da > db;
  std::map<int, int> diff;
  for (const auto& [var, e] : a.factors) diff[variableIndex(var)] += e;
  for (const auto& [var, e] : b.factors) diff[variableIndex(var)] -= e;
  for (auto it = diff.rbegin(); it != diff.rend(); ++it) {
    if (it->second != 0) return it->second < 0;
  }
  return false;
}

struct Layout {
  std::vector<DerivativeTerm> numerator;  // integer coefficients, rho exponents >= 0
  Rational content;                       // positive, with the overall sign folded into `negative`
  bool negative = false;
  int rhoPower = 0;
};

Layout layout(const RhoPoly& poly) {
  Layout out;
  out.rhoPower = poly.denomPower();
  out.numerator = derivativeTerms(poly.numerator());
  Integer numGcd(0);
  Integer denLcm(1);
  for (const auto& t : out.numerator) {
    mpz_gcd(numGcd.get_mpz_t(), numGcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  out.content = Rational(abs(numGcd), denLcm);
  out.content.canonicalize();
  out.negative = !out.numerator.empty() && sgn(out.numerator.front().coeff) < 0;
  for (auto& t : out.numerator) {
    t.coeff /= out.content;
    if (out.negative) t.coeff = -t.coeff;
  }
  return out;
}

std::string monomialText(const DerivativeTerm& t, bool latex) {
  std::string s;
  for (const auto& [var, e] : t.factors) {
    if (!s.empty()) s += latex ? " " : "*";
    if (latex) {
      s += var.degree() == 0 ? "\\rho" : "\\rho_{" + std::string(var.u, 'u') + std::string(var.v, 'v') + "}";
      if (e != 1) s += "^{" + std::to_string(e) + "}";
    } else {
      s += derivativeName(var);
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

std::string sumText(const std::vector<DerivativeTerm>& terms, bool latex) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const bool neg = sgn(t.coeff) < 0;
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    const Rational mag = abs(t.coeff);
    const std::string mono = monomialText(t, latex);
    if (mono.empty()) {
      s += toString(mag);
    } else {
      if (mag != 1) s += toString(mag) + (latex ? " " : "*");
      s += mono;
    }
  }
  return s;
}

std::string piText(int piPower, bool latex) {
  if (piPower == 0) return "";
  std::string s = latex ? "\\pi" : "pi";
  if (piPower != 1) s += latex ? "^{" + std::to_string(piPower) + "}" : "^" + std::to_string(piPower);
  return s;
}

}  // namespace

std::optional<Format> parseFormat(std::string_view name) {
  if (name == "plain") return Format::Plain;
  if (name == "latex") return Format::Latex;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string derivativeName(Exponent2 var) {
  if (var.degree() == 0) return "rho";
  return "rho_" + std::string(var.u, 'u') + std::string(var.v, 'v');
}

std::vector<DerivativeTerm> derivativeTerms(const RhoPoly& poly) {
  std::vector<DerivativeTerm> out;
  for (const auto& [m, c] : poly.terms()) {
    DerivativeTerm t;
    t.coeff = c;
    if (m.rho00Exponent() != 0) t.factors.push_back({Exponent2{0, 0}, m.rho00Exponent()});
    for (const auto& [var, e] : m.factors()) {
      t.factors.push_back({var, e});
      for (int i = 0; i < e; ++i) t.coeff /= Rational(derivativeFactor(var));
    }
    std::sort(t.factors.begin(), t.factors.end(),
              [](const auto& x, const auto& y) { return variableIndex(x.first) < variableIndex(y.first); });
    out.push_back(std::move(t));
  }
  std::stable_sort(out.begin(), out.end(), grevlexBefore);
  return out;
}

std::string renderClosedForm(const ClosedForm& form, Format fmt) {
  if (fmt == Format::Json) return closedFormToJson(form).dump();
  if (form.poly.isZero()) return "0";
  const bool latex = fmt == Format::Latex;
  const Layout l = layout(form.poly);

  std::string num = sumText(l.numerator, latex);
  const Integer& contentNum = l.content.get_num();
  if (l.numerator.size() > 1 && (!latex || contentNum != 1)) num = (latex ? "\\left(" : "(") + num + (latex ? "\\right)" : ")");
  if (contentNum != 1) {
    if (num == "1") {
      num = contentNum.get_str();
    } else {
      num = contentNum.get_str() + (latex ? " " : "*") + num;
    }
  }

  std::vector<std::string> den;
  if (l.content.get_den() != 1) den.push_back(l.content.get_den().get_str());
  if (form.piPower != 0) den.push_back(piText(form.piPower, latex));
  if (l.rhoPower > 0) {
    den.push_back(latex ? "\\rho" + (l.rhoPower == 1 ? std::string() : "^{" + std::to_string(l.rhoPower) + "}")
                        : "rho" + (l.rhoPower == 1 ? std::string() : "^" + std::to_string(l.rhoPower)));
  }
  const std::string sign = l.negative ? "-" : "";
  if (den.empty()) return sign + num;
  std::string denText;
  for (std::size_t i = 0; i < den.size(); ++i) {
    if (i > 0) denText += latex ? " " : "*";
    denText += den[i];
  }
  if (latex) return sign + "\\frac{" + num + "}{" + denText + "}";
  if (den.size() == 1) return sign + num + " / " + denText;
  return sign + num + " / (" + denText + ")";
}

std::string renderNumeric(const PiScaled& value, Format fmt) {
  switch (fmt) {
    case Format::Plain: return toString(value);
    case Format::Latex: {
      if (value.isZero()) return "0";
      const Rational mag = abs(value.q);
      const std::string sign = sgn(value.q) < 0 ? "-" : "";
      std::string den;
      if (mag.get_den() != 1) den = mag.get_den().get_str();
      if (value.piPower != 0) den += piText(value.piPower, true);
      if (den.empty()) return sign + mag.get_num().get_str();
      return sign + "\\frac{" + mag.get_num().get_str() + "}{" + den + "}";
    }
    case Format::Json: {
      nlohmann::json j{{"q", toString(value.q)}, {"piPower", value.piPower}};
      return j.dump();
    }
  }
  return {};
}

std::string render(const HeatInvariantResult& result, Format fmt) {
  return result.isClosedForm() ? renderClosedForm(result.closedForm(), fmt) : renderNumeric(result.numeric(), fmt);
}

nlohmann::json closedFormToJson(const ClosedForm& form) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : derivativeTerms(form.poly)) {
    nlohmann::json mono = nlohmann::json::array();
    for (const auto& [var, e] : t.factors) mono.push_back({var.u, var.v, e});
    terms.push_back({{"monomial", mono}, {"coeff", toString(t.coeff)}});
  }
  return {{"variables", "derivative"}, {"piPower", form.piPower}, {"terms", terms}};
}

ClosedForm closedFormFromJson(const nlohmann::json& j) {
  auto fail = [](const std::string& path, const std::string& what) -> void {
    raise(ErrorCode::SchemaError, path + ": " + what);
  };
  if (!j.is_object()) fail("$", "expected an object");
  if (!j.contains("piPower") || !j["piPower"].is_number_integer()) fail("$.piPower", "expected an integer");
  if (!j.contains("terms") || !j["terms"].is_array()) fail("$.terms", "expected an array");
  ClosedForm form;
  form.piPower = j["piPower"].get<int>();
  for (std::size_t i = 0; i < j["terms"].size(); ++i) {
    const auto& t = j["terms"][i];
    const std::string path = "$.terms[" + std::to_string(i) + "]";
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string()) fail(path + ".coeff", "expected a string");
    auto coeff = parseRational(t["coeff"].get<std::string>());
    if (!coeff) fail(path + ".coeff", "not a rational");
    if (!t.contains("monomial") || !t["monomial"].is_array()) fail(path + ".monomial", "expected an array");
    std::vector<RhoMonomial::Factor> factors;
    Rational c = *coeff;
    for (std::size_t f = 0; f < t["monomial"].size(); ++f) {
      const auto& entry = t["monomial"][f];
      const std::string fpath = path + ".monomial[" + std::to_string(f) + "]";
      if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
          !entry[2].is_number_integer()) {
        fail(fpath, "expected [a, b, exponent]");
      }
      const Exponent2 var{entry[0].get<int>(), entry[1].get<int>()};
      const int e = entry[2].get<int>();
      if (var.u < 0 || var.v < 0 || (var.degree() > 0 && e < 0)) fail(fpath, "invalid variable or exponent");
      factors.push_back({var, e});
      for (int k = 0; k < e; ++k) c *= Rational(derivativeFactor(var));
    }
    form.poly += RhoPoly(RhoMonomial::fromFactors(0, factors), c);
  }
  return form;
}

}  // namespace heatinv
