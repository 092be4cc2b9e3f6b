#pragma once

// Verification engines that share nothing with the heat-invariant evaluators
// beyond the jet and polynomial primitives.
//
// The sphere of radius R has spectrum l(l+1)/R^2 with multiplicity 2l+1, and
// by homogeneity K(t,x,x) = trace / (4 pi R^2). Fitting
//   t K(t,x,x) = a0 + a1 t + a2 t^2 + ...
// on a geometric grid of small t recovers the pointwise invariants.

#include <boost/multiprecision/mpfr.hpp>
#include <string>
#include <vector>

#include "heatinv/jet.hpp"
#include "heatinv/pi_scaled.hpp"
#include "heatinv/rational.hpp"
#include "heatinv/rho_poly.hpp"

namespace heatinv::oracle {

using HighFloat = boost::multiprecision::mpfr_float;

/// Sets the mpfr default precision (decimal digits) for the guard's lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

struct SphereModel {
  Rational radius{1};

  HighFloat eigenvalue(long l) const;
  long multiplicity(long l) const { return 2 * l + 1; }
  HighFloat area() const;
};

struct HeatTrace {
  HighFloat value;
  HighFloat tailBound;  // bound on sum_{l > lMax}
  long lMax = 0;
};

/// sum_{l=0}^{lMax} (2l+1) exp(-l(l+1) t / R^2). Throws TailNotConverged when
/// the tail bound exceeds `tolerance`.
HeatTrace sphereHeatTrace(const SphereModel& model, const HighFloat& t, long lMax, const HighFloat& tolerance);

/// Smallest cutoff whose tail bound is <= tolerance.
long sphereCutoff(const SphereModel& model, const HighFloat& t, const HighFloat& tolerance);

/// Trace with an automatically chosen cutoff.
HeatTrace sphereHeatTrace(const SphereModel& model, const HighFloat& t, const HighFloat& tolerance);

struct FitOptions {
  double tMin = 1e-3;
  double tMax = 1e-1;
  double ratio = 2.0;
  int extrapolationOrder = 3;
  unsigned digits = 64;
};

struct AsymptoticFit {
  std::vector<double> coefficients;  // estimates of a_0(x), a_1(x), ...
  std::vector<double> errors;        // error bars from the extrapolation ladder
  std::vector<std::string> precise;  // coefficients to ~30 significant digits
  double residual = 0;               // RMS misfit of t K(t,x,x) on the grid
  std::vector<double> tGrid;
};

/// Requires 1 <= nTerms <= 3. Throws IllConditionedFit when an error bar is as
/// large as its estimate or the grid is too small for the fit degree.
AsymptoticFit fitDiagonalCoefficients(const SphereModel& model, int nTerms, const FitOptions& options = {});

/// The classical a_1 = (rho_u^2 + rho_v^2 - rho rho_uu - rho rho_vv) / (24 pi rho^3),
/// built directly: returns the coefficient of 1/pi in Taylor variables rho_ab.
RhoPoly goldenA1Symbolic();

/// The same formula evaluated on a numeric jet.
PiScaled goldenA1(const Jet2D<Rational>& rho);

}  // namespace heatinv::oracle
