#include "heatinv/oracle.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>

#include "heatinv/error.hpp"

namespace heatinv::oracle {

namespace {

HighFloat toHigh(const Rational& q) {
  return HighFloat(q.get_num().get_str()) / HighFloat(q.get_den().get_str());
}

HighFloat reducedTime(const SphereModel& model, const HighFloat& t) {
  const HighFloat r = toHigh(model.radius);
  return t / (r * r);
}

// Beyond this l the summand (2l+1) e^{-l(l+1) tau} decreases, so the tail is
// bounded by its integral, e^{-L(L+1) tau} / tau.
long decreasingFrom(const HighFloat& tau) {
  const double tauD = tau.convert_to<double>();
  return static_cast<long>(std::ceil((std::sqrt(2.0 / tauD) - 1.0) / 2.0)) + 1;
}

std::vector<HighFloat> leastSquares(const std::vector<HighFloat>& ts, const std::vector<HighFloat>& ys, int degree) {
  const int n = degree + 1;
  std::vector<std::vector<HighFloat>> a(n, std::vector<HighFloat>(n + 1, HighFloat(0)));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::vector<HighFloat> powers(2 * n, HighFloat(1));
    for (int j = 1; j < 2 * n; ++j) powers[j] = powers[j - 1] * ts[i];
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a[r][c] += powers[r + c];
      a[r][n] += powers[r] * ys[i];
    }
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    if (a[col][col] == 0) raise(ErrorCode::IllConditionedFit, "singular normal equations");
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const HighFloat f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<HighFloat> x(n);
  for (int r = 0; r < n; ++r) x[r] = a[r][n] / a[r][r];
  return x;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned digits) : saved_(HighFloat::default_precision()) {
  HighFloat::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { HighFloat::default_precision(saved_); }

HighFloat SphereModel::eigenvalue(long l) const {
  const HighFloat r = toHigh(radius);
  return HighFloat(l) * HighFloat(l + 1) / (r * r);
}

HighFloat SphereModel::area() const {
  const HighFloat r = toHigh(radius);
  return 4 * boost::math::constants::pi<HighFloat>() * r * r;
}

HeatTrace sphereHeatTrace(const SphereModel& model, const HighFloat& t, long lMax, const HighFloat& tolerance) {
  if (t <= 0) raise(ErrorCode::TailNotConverged, "heat trace needs t > 0");
  const HighFloat tau = reducedTime(model, t);
  HeatTrace out;
  out.lMax = lMax;
  out.value = 0;
  for (long l = 0; l <= lMax; ++l) {
    out.value += HighFloat(2 * l + 1) * exp(-HighFloat(l) * HighFloat(l + 1) * tau);
  }
  if (lMax < decreasingFrom(tau)) {
    raise(ErrorCode::TailNotConverged, "cutoff " + std::to_string(lMax) + " is below the decreasing range");
  }
  out.tailBound = exp(-HighFloat(lMax) * HighFloat(lMax + 1) * tau) / tau;
  if (out.tailBound > tolerance) {
    raise(ErrorCode::TailNotConverged, "tail bound exceeds tolerance at cutoff " + std::to_string(lMax));
  }
  return out;
}

long sphereCutoff(const SphereModel& model, const HighFloat& t, const HighFloat& tolerance) {
  const HighFloat tau = reducedTime(model, t);
  // L(L+1) tau >= log(1 / (tau * tolerance))
  const HighFloat target = log(1 / (tau * tolerance)) / tau;
  long l = std::max<long>(decreasingFrom(tau),
                          static_cast<long>(std::floor(std::sqrt(std::max(target.convert_to<double>(), 0.0)))));
  while (HighFloat(l) * HighFloat(l + 1) < target) ++l;
  return l;
}

HeatTrace sphereHeatTrace(const SphereModel& model, const HighFloat& t, const HighFloat& tolerance) {
  return sphereHeatTrace(model, t, sphereCutoff(model, t, tolerance), tolerance);
}

AsymptoticFit fitDiagonalCoefficients(const SphereModel& model, int nTerms, const FitOptions& options) {
  if (nTerms < 1 || nTerms > 3) raise(ErrorCode::IllConditionedFit, "nTerms must be 1, 2 or 3");
  PrecisionScope precision(options.digits);
  const HighFloat tolerance = pow(HighFloat(10), -static_cast<int>(options.digits) + 4);
  const int degree = nTerms + options.extrapolationOrder - 1;

  std::vector<HighFloat> ts;
  std::vector<HighFloat> ys;
  AsymptoticFit fit;
  const HighFloat area = model.area();
  for (double t = options.tMin; t <= options.tMax * (1 + 1e-12); t *= options.ratio) {
    const HighFloat th(t);
    ts.push_back(th);
    ys.push_back(th * sphereHeatTrace(model, th, tolerance).value / area);
    fit.tGrid.push_back(t);
  }
  if (static_cast<int>(ts.size()) < degree + 2) {
    raise(ErrorCode::IllConditionedFit, "t-grid has too few points for a degree-" + std::to_string(degree) + " fit");
  }

  const auto main = leastSquares(ts, ys, degree);
  const auto higher = leastSquares(ts, ys, degree + 1);
  std::vector<HighFloat> halfT;
  std::vector<HighFloat> halfY;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (fit.tGrid[i] <= options.tMax / 2) {
      halfT.push_back(ts[i]);
      halfY.push_back(ys[i]);
    }
  }
  const int halfDegree = std::min<int>(degree, static_cast<int>(halfT.size()) - 1);
  if (halfDegree < nTerms - 1) raise(ErrorCode::IllConditionedFit, "half window too small");
  const auto half = leastSquares(halfT, halfY, halfDegree);

  HighFloat sq(0);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    HighFloat model_y(0);
    HighFloat p(1);
    for (const auto& c : main) {
      model_y += c * p;
      p *= ts[i];
    }
    sq += (ys[i] - model_y) * (ys[i] - model_y);
  }
  fit.residual = sqrt(sq / HighFloat(ts.size())).convert_to<double>();

  for (int j = 0; j < nTerms; ++j) {
    const HighFloat err = 2 * std::max(abs(main[j] - higher[j]), abs(main[j] - half[j]));
    if (err >= abs(main[j])) raise(ErrorCode::IllConditionedFit, "coefficient " + std::to_string(j) + " lost all digits");
    fit.coefficients.push_back(main[j].convert_to<double>());
    fit.errors.push_back(err.convert_to<double>());
    fit.precise.push_back(main[j].str(30));
  }
  return fit;
}

RhoPoly goldenA1Symbolic() {
  // Derivative values: rho_u = rho_10, rho_v = rho_01, rho_uu = 2 rho_20, rho_vv = 2 rho_02.
  const RhoPoly rho = RhoPoly::variable(0, 0);
  const RhoPoly rhoU = RhoPoly::variable(1, 0);
  const RhoPoly rhoV = RhoPoly::variable(0, 1);
  const RhoPoly rhoUU = RhoPoly::variable(2, 0).scaled(Rational(2));
  const RhoPoly rhoVV = RhoPoly::variable(0, 2).scaled(Rational(2));
  const RhoPoly numerator = rhoU * rhoU + rhoV * rhoV - rho * rhoUU - rho * rhoVV;
  const RhoPoly invRho3(RhoMonomial::rho00Power(-3), Rational(1, 24));
  return numerator * invRho3;
}

PiScaled goldenA1(const Jet2D<Rational>& rho) {
  const Rational r = rho.coefficient(0, 0);
  if (sgn(r) == 0) raise(ErrorCode::NonInvertibleConstantTerm, "rho(0,0) = 0");
  const Rational ru = rho.coefficient(1, 0);
  const Rational rv = rho.coefficient(0, 1);
  const Rational ruu = 2 * rho.coefficient(2, 0);
  const Rational rvv = 2 * rho.coefficient(0, 2);
  const Rational value = (ru * ru + rv * rv - r * ruu - r * rvv) / (24 * r * r * r);
  return {value, 1};
}

}  // namespace heatinv::oracle
