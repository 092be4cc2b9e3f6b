#pragma once

// Polynomials in the formal Taylor coefficients rho_ab of the conformal factor
// (rho(u, v) = sum rho_ab u^a v^b), with rho_00 allowed to appear to negative
// powers. Storing rho_00 as a Laurent variable keeps every value in the
// canonical form numerator / rho_00^e with rho_00 not dividing the numerator.

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "heatinv/jet.hpp"
#include "heatinv/rational.hpp"

namespace heatinv {

class RhoMonomial {
 public:
  using Factor = std::pair<Exponent2, int>;

  RhoMonomial() = default;

  /// rho_ab to the first power; (0, 0) gives rho_00.
  static RhoMonomial variable(int a, int b);
  static RhoMonomial rho00Power(int exponent);
  /// Builds a monomial from arbitrary (variable, exponent) pairs; exponents of
  /// the same variable are summed. Only rho_00 may end up negative.
  static RhoMonomial fromFactors(int rho00Exponent, const std::vector<Factor>& factors);

  int rho00Exponent() const { return rho00_; }
  /// Variables other than rho_00, sorted, exponents > 0.
  const std::vector<Factor>& factors() const { return factors_; }
  bool isPureRho00() const { return factors_.empty(); }

  /// Derivative-order weight: sum of (a + b) * exponent. rho_00 has weight 0.
  int weight() const;
  /// Total polynomial degree counting rho_00's exponent.
  int degree() const;

  RhoMonomial operator*(const RhoMonomial& other) const;
  auto operator<=>(const RhoMonomial&) const = default;

 private:
  int rho00_ = 0;
  std::vector<Factor> factors_;
};

class RhoPoly {
 public:
  using Terms = std::map<RhoMonomial, Rational>;

  RhoPoly() = default;
  explicit RhoPoly(const Rational& constant);
  RhoPoly(const RhoMonomial& m, const Rational& coeff);

  static RhoPoly variable(int a, int b) { return RhoPoly(RhoMonomial::variable(a, b), Rational(1)); }

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  /// e in numerator / rho_00^e.
  int denomPower() const;
  /// The polynomial numerator (this * rho_00^e).
  RhoPoly numerator() const;

  /// Inverse when this is c * rho_00^k (the only units of the ring).
  std::optional<RhoPoly> unitInverse() const;

  RhoPoly& operator+=(const RhoPoly& other);
  RhoPoly& operator-=(const RhoPoly& other);
  RhoPoly& operator*=(const RhoPoly& other) { return *this = *this * other; }

  friend RhoPoly operator+(RhoPoly a, const RhoPoly& b) { return a += b; }
  friend RhoPoly operator-(RhoPoly a, const RhoPoly& b) { return a -= b; }
  friend RhoPoly operator*(const RhoPoly& a, const RhoPoly& b);
  friend RhoPoly operator-(const RhoPoly& a);
  RhoPoly scaled(const Rational& q) const;

  bool operator==(const RhoPoly&) const = default;

 private:
  void addTerm(const RhoMonomial& m, const Rational& c);

  Terms terms_;
};

inline bool isZero(const RhoPoly& p) { return p.isZero(); }
inline std::optional<RhoPoly> invertUnit(const RhoPoly& p) { return p.unitInverse(); }
inline RhoPoly scale(const RhoPoly& p, const Rational& q) { return p.scaled(q); }

static_assert(CoefficientRing<Rational>);
static_assert(CoefficientRing<RhoPoly>);

/// The fully generic rho-jet: coefficient (a, b) is the variable rho_ab.
Jet2D<RhoPoly> symbolicRhoJet(int order);

/// Substitutes rho_ab := rho.coefficient(a, b). Requires rho(0,0) != 0 when
/// p has a denominator.
Rational substitute(const RhoPoly& p, const Jet2D<Rational>& rho);

}  // namespace heatinv
