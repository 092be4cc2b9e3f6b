#pragma once

// Truncated bivariate Taylor series ("jets") in (u, v) at the origin.
//
// A Jet2D<C> of order N carries every monomial u^a v^b with a + b <= N.
// Coefficients live in an exact commutative ring C; zero coefficients are
// never stored, so two jets compare equal iff their orders and coefficient
// maps coincide.

#include <algorithm>
#include <compare>
#include <concepts>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "heatinv/error.hpp"
#include "heatinv/rational.hpp"

namespace heatinv {

template <class C>
concept CoefficientRing = std::regular<C> && requires(C& x, const C& a, const C& b, const Rational& q) {
  C{a + b};
  C{a - b};
  C{a * b};
  C{-a};
  C{q};
  x += a;
  { scale(a, q) } -> std::convertible_to<C>;
  { isZero(a) } -> std::convertible_to<bool>;
  { invertUnit(a) } -> std::same_as<std::optional<C>>;
};

struct Exponent2 {
  int u = 0;
  int v = 0;

  int degree() const { return u + v; }
  auto operator<=>(const Exponent2&) const = default;
};

enum class Variable { U, V };

namespace detail {
// Unqualified call so ADL finds ring hooks declared after this header.
template <class C>
bool coefficientIsZero(const C& c) {
  return isZero(c);
}
}  // namespace detail

template <CoefficientRing C>
class Jet2D {
 public:
  using Coefficients = std::map<Exponent2, C>;

  explicit Jet2D(int order = 0) : order_(order) {
    if (order < 0) raise(ErrorCode::OrderExhausted, "negative jet order");
  }

  static Jet2D constant(const C& c, int order) {
    Jet2D j(order);
    j.accumulate(0, 0, c);
    return j;
  }

  static Jet2D monomial(int a, int b, int order, const C& c = C{Rational(1)}) {
    Jet2D j(order);
    j.accumulate(a, b, c);
    return j;
  }

  int order() const { return order_; }
  const Coefficients& coefficients() const { return coeffs_; }
  bool isZero() const { return coeffs_.empty(); }

  C coefficient(int a, int b) const {
    auto it = coeffs_.find({a, b});
    return it == coeffs_.end() ? C{Rational(0)} : it->second;
  }

  /// Adds c to the u^a v^b coefficient. Terms above the truncation order are
  /// dropped; cancellation removes the key.
  void accumulate(int a, int b, const C& c) {
    if (a < 0 || b < 0 || a + b > order_ || detail::coefficientIsZero(c)) return;
    auto [it, inserted] = coeffs_.try_emplace(Exponent2{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (detail::coefficientIsZero(it->second)) coeffs_.erase(it);
    }
  }

  Jet2D truncated(int order) const {
    if (order > order_) {
      raise(ErrorCode::OrderExhausted,
            "cannot raise jet order from " + std::to_string(order_) + " to " + std::to_string(order));
    }
    Jet2D r(order);
    for (const auto& [e, c] : coeffs_) {
      if (e.degree() <= order) r.coeffs_.emplace(e, c);
    }
    return r;
  }

  bool operator==(const Jet2D&) const = default;

 private:
  int order_;
  Coefficients coeffs_;
};

template <CoefficientRing C>
Jet2D<C> add(const Jet2D<C>& a, const Jet2D<C>& b) {
  Jet2D<C> r = a.truncated(std::min(a.order(), b.order()));
  for (const auto& [e, c] : b.coefficients()) r.accumulate(e.u, e.v, c);
  return r;
}

template <CoefficientRing C>
Jet2D<C> scaled(const Jet2D<C>& a, const Rational& q) {
  Jet2D<C> r(a.order());
  for (const auto& [e, c] : a.coefficients()) r.accumulate(e.u, e.v, C{scale(c, q)});
  return r;
}

template <CoefficientRing C>
  requires(!std::same_as<C, Rational>)
Jet2D<C> scaled(const Jet2D<C>& a, const C& factor) {
  Jet2D<C> r(a.order());
  for (const auto& [e, c] : a.coefficients()) r.accumulate(e.u, e.v, C{c * factor});
  return r;
}

template <CoefficientRing C>
Jet2D<C> negate(const Jet2D<C>& a) {
  return scaled(a, Rational(-1));
}

template <CoefficientRing C>
Jet2D<C> subtract(const Jet2D<C>& a, const Jet2D<C>& b) {
  return add(a, negate(b));
}

/// Product of a and b read as polynomials, keeping monomials of degree <= order.
/// Unlike multiply(), the result order is chosen by the caller and is not
/// capped by the operand orders.
template <CoefficientRing C>
Jet2D<C> multiplyAsPolynomials(const Jet2D<C>& a, const Jet2D<C>& b, int order) {
  Jet2D<C> r(order);
  for (const auto& [ea, ca] : a.coefficients()) {
    if (ea.degree() > order) continue;
    for (const auto& [eb, cb] : b.coefficients()) {
      if (ea.degree() + eb.degree() > order) continue;
      r.accumulate(ea.u + eb.u, ea.v + eb.v, C{ca * cb});
    }
  }
  return r;
}

/// Cauchy product truncated to the smaller of the two orders.
template <CoefficientRing C>
Jet2D<C> multiply(const Jet2D<C>& a, const Jet2D<C>& b) {
  return multiplyAsPolynomials(a, b, std::min(a.order(), b.order()));
}

template <CoefficientRing C>
Jet2D<C> power(const Jet2D<C>& a, int exponent) {
  Jet2D<C> r = Jet2D<C>::constant(C{Rational(1)}, a.order());
  Jet2D<C> base = a;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) r = multiply(r, base);
    if (e > 1) base = multiply(base, base);
  }
  return r;
}

/// Series inverse by the degree-by-degree recursion
///   b_00 = 1/a_00,  b_ij = -b_00 * sum_{(p,q) != 0} a_pq b_{i-p, j-q}.
template <CoefficientRing C>
Jet2D<C> inverse(const Jet2D<C>& a) {
  std::optional<C> inv0 = invertUnit(a.coefficient(0, 0));
  if (!inv0) raise(ErrorCode::NonInvertibleConstantTerm, "jet constant term is not a unit");
  const C minusInv0{-*inv0};
  Jet2D<C> b = Jet2D<C>::constant(*inv0, a.order());
  for (int d = 1; d <= a.order(); ++d) {
    for (int i = 0; i <= d; ++i) {
      const int j = d - i;
      C sum{Rational(0)};
      for (const auto& [e, c] : a.coefficients()) {
        if (e.degree() == 0 || e.u > i || e.v > j) continue;
        auto it = b.coefficients().find({i - e.u, j - e.v});
        if (it != b.coefficients().end()) sum += C{c * it->second};
      }
      if (!isZero(sum)) b.accumulate(i, j, C{sum * minusInv0});
    }
  }
  return b;
}

/// Formal partial derivative; the result has order max(order - 1, 0).
template <CoefficientRing C>
Jet2D<C> differentiate(const Jet2D<C>& a, Variable var) {
  Jet2D<C> r(std::max(a.order() - 1, 0));
  for (const auto& [e, c] : a.coefficients()) {
    if (var == Variable::U && e.u > 0) r.accumulate(e.u - 1, e.v, C{scale(c, Rational(e.u))});
    if (var == Variable::V && e.v > 0) r.accumulate(e.u, e.v - 1, C{scale(c, Rational(e.v))});
  }
  return r;
}

template <CoefficientRing C>
struct LogJet {
  Jet2D<C> jet;
  // log a(0,0) was discarded (it is nonzero unless a(0,0) == 1).
  bool droppedConstant = false;
};

/// log a with its constant term removed: log(1 + w), w = a/a(0,0) - 1.
/// Only derivatives of the logarithm are ever consumed.
template <CoefficientRing C>
LogJet<C> logarithm(const Jet2D<C>& a) {
  const C a0 = a.coefficient(0, 0);
  std::optional<C> inv0 = invertUnit(a0);
  if (!inv0) raise(ErrorCode::NonInvertibleConstantTerm, "logarithm of a jet with non-unit constant term");
  Jet2D<C> w(a.order());
  for (const auto& [e, c] : a.coefficients()) {
    if (e.degree() > 0) w.accumulate(e.u, e.v, C{c * *inv0});
  }
  Jet2D<C> result(a.order());
  Jet2D<C> wPower = Jet2D<C>::constant(C{Rational(1)}, a.order());
  for (int j = 1; j <= a.order(); ++j) {
    wPower = multiply(wPower, w);
    if (wPower.isZero()) break;
    const Rational coeff(j % 2 == 1 ? 1 : -1, j);
    for (const auto& [e, c] : wPower.coefficients()) result.accumulate(e.u, e.v, C{scale(c, coeff)});
  }
  return {std::move(result), !(a0 == C{Rational(1)})};
}

template <CoefficientRing C>
C evalOrigin(const Jet2D<C>& a) {
  return a.coefficient(0, 0);
}

/// Composition a(m11 u + m12 v, m21 u + m22 v) at the same order.
template <CoefficientRing C>
Jet2D<C> substituteLinear(const Jet2D<C>& a, const Rational& m11, const Rational& m12, const Rational& m21,
                          const Rational& m22) {
  const int order = a.order();
  Jet2D<C> x(order);
  x.accumulate(1, 0, C{m11});
  x.accumulate(0, 1, C{m12});
  Jet2D<C> y(order);
  y.accumulate(1, 0, C{m21});
  y.accumulate(0, 1, C{m22});
  std::map<int, Jet2D<C>> xPowers;
  std::map<int, Jet2D<C>> yPowers;
  auto cachedPower = [](std::map<int, Jet2D<C>>& cache, const Jet2D<C>& base, int e) -> const Jet2D<C>& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, power(base, e)).first;
    return it->second;
  };
  Jet2D<C> r(order);
  for (const auto& [e, c] : a.coefficients()) {
    Jet2D<C> term = multiply(cachedPower(xPowers, x, e.u), cachedPower(yPowers, y, e.v));
    for (const auto& [f, d] : term.coefficients()) r.accumulate(f.u, f.v, C{c * d});
  }
  return r;
}

}  // namespace heatinv
