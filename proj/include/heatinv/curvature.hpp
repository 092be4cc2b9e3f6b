#pragma once

// Curvature coordinates z = K - K0, w = Delta K - Delta K0 around the base
// point, the inverse-metric coefficients E, F, G of the frozen operator in
// those coordinates, and the invariant heat-invariant formula built on them.
// Everything is evaluated at the origin of the conformal chart over Q.

#include "heatinv/heat_constants.hpp"
#include "heatinv/heat_invariant.hpp"
#include "heatinv/jet.hpp"
#include "heatinv/rational.hpp"

namespace heatinv {

struct CurvatureFrame {
  Rational K0;
  Rational laplacianK0;   // (Delta K)(x)
  Rational laplacian2K0;  // (Delta^2 K)(x)
  Rational E;             // -Delta(z^2)/2
  Rational F;             // -Delta(z w)/2
  Rational G;             // -Delta(w^2)/2
  Rational jacobian;      // det d(K, Delta K)/d(u, v)
  bool degenerate = true;
};

/// Minimum rho order for the frame alone.
inline constexpr int kFrameOrder = 8;
/// Minimum rho order for the invariant formula at level n.
inline int curvatureOrderFor(int n) { return 8 * n + 6; }

CurvatureFrame curvatureFrame(const Jet2D<Rational>& rho);

struct FrameCoefficients {
  Rational E;
  Rational F;
  Rational G;
  bool operator==(const FrameCoefficients&) const = default;
};

/// E, F, G from the expanded identities
///   2E = 2 K Delta K - Delta(K^2)
///   2F = K Delta^2 K + (Delta K)^2 - Delta(K Delta K)
///   2G = 2 Delta K Delta^2 K - Delta((Delta K)^2)
/// evaluated without forming z or w.
FrameCoefficients frameFromCurvatureIdentities(const Jet2D<Rational>& rho);

/// Value at x of the conformal factor in the coordinates
/// u' = sqrt(EG - F^2) z, v' = E w - F z:  1 / (E (EG - F^2)).
Rational conformalFactorAtPoint(const CurvatureFrame& frame);

/// Coefficient of 1/pi in a_n from the curvature-coordinate formula.
Rational heatInvariantCurvatureCoefficient(int n, const Jet2D<Rational>& rho, const HeatConstantTable& table);

HeatInvariantResult heatInvariantCurvatureForm(int n, const Jet2D<Rational>& rho);

}  // namespace heatinv
