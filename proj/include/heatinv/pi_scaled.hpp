#pragma once

#include <string>

#include "heatinv/rational.hpp"

namespace heatinv {

/// An exact number q * pi^(-piPower).
struct PiScaled {
  Rational q{0};
  int piPower = 0;

  bool isZero() const { return sgn(q) == 0; }

  /// Requires equal pi powers. A zero operand adopts the other's pi power.
  PiScaled& operator+=(const PiScaled& other);
  friend PiScaled operator+(PiScaled a, const PiScaled& b) { return a += b; }
  friend PiScaled operator-(const PiScaled& a) { return {-a.q, a.piPower}; }
  friend PiScaled operator*(const PiScaled& a, const PiScaled& b) { return {a.q * b.q, a.piPower + b.piPower}; }
  friend PiScaled operator*(const PiScaled& a, const Rational& r) { return {a.q * r, a.piPower}; }

  /// Zero compares equal regardless of pi power.
  friend bool operator==(const PiScaled& a, const PiScaled& b) {
    if (a.isZero() || b.isZero()) return a.isZero() && b.isZero();
    return a.q == b.q && a.piPower == b.piPower;
  }
};

/// Exact rendering: "0", "q", "p/pi", "p/(d*pi^2)", ...
std::string toString(const PiScaled& x);

/// Decimal expansion to the given number of significant digits.
std::string toDecimal(const PiScaled& x, int digits);

/// Nearest double; used when comparing against floating oracles.
double toDouble(const PiScaled& x);

}  // namespace heatinv
