#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace heatinv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (canonicalized). Returns nullopt on malformed
/// text or a zero denominator.
std::optional<Rational> parseRational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string toString(const Rational& q);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Exact integer power; negative exponents require q != 0.
Rational power(const Rational& q, int exponent);

// Coefficient-ring hooks for Rational (see jet.hpp).
inline bool isZero(const Rational& q) { return sgn(q) == 0; }
inline std::optional<Rational> invertUnit(const Rational& q) {
  if (isZero(q)) return std::nullopt;
  return Rational(1) / q;
}
inline Rational scale(const Rational& a, const Rational& q) { return a * q; }

}  // namespace heatinv
