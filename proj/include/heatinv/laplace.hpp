#pragma once

// Laplace-Beltrami operator of a conformal metric ds^2 = rho (du^2 + dv^2):
//   Delta f = -(1/rho) (f_uu + f_vv)
// acting on jets. Each application consumes two orders of accuracy.

#include <string>

#include "heatinv/error.hpp"
#include "heatinv/jet.hpp"

namespace heatinv {

namespace detail {

template <CoefficientRing C>
Jet2D<C> flatLaplacian(const Jet2D<C>& f) {
  Jet2D<C> r(f.order() - 2);
  for (const auto& [e, c] : f.coefficients()) {
    if (e.u >= 2) r.accumulate(e.u - 2, e.v, C{scale(c, Rational(e.u * (e.u - 1)))});
    if (e.v >= 2) r.accumulate(e.u, e.v - 2, C{scale(c, Rational(e.v * (e.v - 1)))});
  }
  return r;
}

inline void requireOrder(int order, int needed, const char* what) {
  if (order < needed) {
    raise(ErrorCode::OrderExhausted, std::string(what) + ": jet order " + std::to_string(order) +
                                         " is below the required " + std::to_string(needed));
  }
}

}  // namespace detail

template <CoefficientRing C>
class ConformalLaplacian {
 public:
  /// Exact operator for inputs up to order workingOrder + 2.
  ConformalLaplacian(const Jet2D<C>& rho, int workingOrder)
      : ConformalLaplacian(rho, workingOrder, false) {}

  /// Operator whose 1/rho coefficients stop at degree maxWeight while inputs of
  /// any order are accepted. For f a polynomial whose coefficients have weight 0
  /// (rationals and powers of rho_00) and degree >= 2k - maxWeight, every
  /// coefficient met while forming Delta^k f |_0 is weight-homogeneous of
  /// weight <= maxWeight (rho_ab has weight a + b), so a 1/rho term of higher
  /// degree only ever multiplies zero.
  /// Origin values of that shape are exact; other uses are not.
  static ConformalLaplacian graded(const Jet2D<C>& rho, int maxWeight) {
    return ConformalLaplacian(rho, maxWeight, true);
  }

  int workingOrder() const { return workingOrder_; }
  bool isGraded() const { return graded_; }
  const Jet2D<C>& inverseRho() const { return invRho_; }
  const C& rho0() const { return rho0_; }

  Jet2D<C> apply(const Jet2D<C>& f) const {
    detail::requireOrder(f.order(), 2, "applyLaplacian");
    const int outOrder = f.order() - 2;
    if (!graded_ && outOrder > workingOrder_) {
      raise(ErrorCode::OrderExhausted, "Laplacian built for order " + std::to_string(workingOrder_) +
                                           " cannot produce order " + std::to_string(outOrder));
    }
    return negate(multiplyAsPolynomials(invRho_, detail::flatLaplacian(f), outOrder));
  }

  Jet2D<C> applyPower(Jet2D<C> f, int k) const {
    detail::requireOrder(f.order(), 2 * k, "applyLaplacianPower");
    for (int i = 0; i < k; ++i) f = apply(f);
    return f;
  }

 private:
  ConformalLaplacian(const Jet2D<C>& rho, int workingOrder, bool graded)
      : workingOrder_(workingOrder), graded_(graded), rho0_(rho.coefficient(0, 0)) {
    detail::requireOrder(rho.order(), workingOrder, "ConformalLaplacian");
    invRho_ = inverse(rho.truncated(workingOrder));
  }

  int workingOrder_;
  bool graded_;
  C rho0_;
  Jet2D<C> invRho_;
};

/// The frozen-coefficient operator -(1/rho0) (d^2/du^2 + d^2/dv^2).
template <CoefficientRing C>
class FrozenLaplacian {
 public:
  explicit FrozenLaplacian(const C& rho0) : rho0_(rho0) {
    std::optional<C> inv = invertUnit(rho0);
    if (!inv) raise(ErrorCode::NonInvertibleConstantTerm, "frozen Laplacian needs an invertible rho(0,0)");
    minusInvRho0_ = C{-*inv};
  }

  const C& rho0() const { return rho0_; }

  Jet2D<C> apply(const Jet2D<C>& f) const {
    detail::requireOrder(f.order(), 2, "applyFrozen");
    return scaled(detail::flatLaplacian(f), minusInvRho0_);
  }

  Jet2D<C> applyPower(Jet2D<C> f, int k) const {
    detail::requireOrder(f.order(), 2 * k, "applyFrozenPower");
    for (int i = 0; i < k; ++i) f = apply(f);
    return f;
  }

 private:
  C rho0_;
  C minusInvRho0_;
};

/// K = (1/2) Delta(log rho), at order rho.order() - 2.
template <CoefficientRing C>
Jet2D<C> gaussianCurvatureJet(const Jet2D<C>& rho) {
  detail::requireOrder(rho.order(), 2, "gaussianCurvatureJet");
  ConformalLaplacian<C> laplacian(rho, rho.order() - 2);
  return scaled(laplacian.apply(logarithm(rho).jet), Rational(1, 2));
}

}  // namespace heatinv
