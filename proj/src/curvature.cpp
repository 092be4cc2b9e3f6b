#include "heatinv/curvature.hpp"

#include <map>

#include "heatinv/error.hpp"
#include "heatinv/laplace.hpp"

namespace heatinv {

namespace {

using Jet = Jet2D<Rational>;

struct CurvatureJets {
  ConformalLaplacian<Rational> laplacian;
  Jet K;
  Jet laplacianK;
};

CurvatureJets curvatureJets(const Jet& rho) {
  ConformalLaplacian<Rational> laplacian(rho, rho.order() - 2);
  Jet K = scaled(laplacian.apply(logarithm(rho).jet), Rational(1, 2));
  Jet laplacianK = laplacian.apply(K);
  return {std::move(laplacian), std::move(K), std::move(laplacianK)};
}

Jet minusConstant(const Jet& j, const Rational& c) {
  Jet r = j;
  r.accumulate(0, 0, -c);
  return r;
}

Rational laplacianAtOrigin(const ConformalLaplacian<Rational>& laplacian, const Jet& f) {
  return evalOrigin(laplacian.apply(f.truncated(2)));
}

}  // namespace

CurvatureFrame curvatureFrame(const Jet& rho) {
  detail::requireOrder(rho.order(), kFrameOrder, "curvatureFrame");
  const auto jets = curvatureJets(rho.truncated(kFrameOrder));
  const auto& L = jets.laplacian;

  CurvatureFrame frame;
  frame.K0 = evalOrigin(jets.K);
  frame.laplacianK0 = evalOrigin(jets.laplacianK);
  frame.laplacian2K0 = laplacianAtOrigin(L, jets.laplacianK);

  const Jet z = minusConstant(jets.K, frame.K0);
  const Jet w = minusConstant(jets.laplacianK, frame.laplacianK0);
  frame.E = -laplacianAtOrigin(L, multiply(z, z)) / 2;
  frame.F = -laplacianAtOrigin(L, multiply(z, w)) / 2;
  frame.G = -laplacianAtOrigin(L, multiply(w, w)) / 2;

  frame.jacobian = jets.K.coefficient(1, 0) * jets.laplacianK.coefficient(0, 1) -
                   jets.K.coefficient(0, 1) * jets.laplacianK.coefficient(1, 0);
  frame.degenerate = sgn(frame.jacobian) == 0;
  return frame;
}

FrameCoefficients frameFromCurvatureIdentities(const Jet& rho) {
  detail::requireOrder(rho.order(), kFrameOrder, "frameFromCurvatureIdentities");
  const auto jets = curvatureJets(rho.truncated(kFrameOrder));
  const auto& L = jets.laplacian;
  const Rational K = evalOrigin(jets.K);
  const Rational dK = evalOrigin(jets.laplacianK);
  const Rational d2K = laplacianAtOrigin(L, jets.laplacianK);
  FrameCoefficients out;
  out.E = (2 * K * dK - laplacianAtOrigin(L, multiply(jets.K, jets.K))) / 2;
  out.F = (K * d2K + dK * dK - laplacianAtOrigin(L, multiply(jets.K, jets.laplacianK))) / 2;
  out.G = (2 * dK * d2K - laplacianAtOrigin(L, multiply(jets.laplacianK, jets.laplacianK))) / 2;
  return out;
}

Rational conformalFactorAtPoint(const CurvatureFrame& frame) {
  const Rational denom = frame.E * (frame.E * frame.G - frame.F * frame.F);
  if (sgn(denom) == 0) raise(ErrorCode::SingularFrame, "E (EG - F^2) vanishes at the base point");
  return 1 / denom;
}

Rational heatInvariantCurvatureCoefficient(int n, const Jet& rho, const HeatConstantTable& table) {
  if (n < 1) raise(ErrorCode::IndexOutOfRange, "heat invariants a_n are computed for n >= 1");
  if (table.n() != n) raise(ErrorCode::IndexOutOfRange, "constant table built for a different n");
  detail::requireOrder(rho.order(), curvatureOrderFor(n), "heatInvariantCurvatureForm");

  const CurvatureFrame frame = curvatureFrame(rho);
  if (frame.degenerate) {
    raise(ErrorCode::DegenerateCurvatureCoordinates, "Jacobian of (K, Delta K) vanishes at the base point");
  }
  const Rational det = frame.E * frame.G - frame.F * frame.F;
  if (sgn(frame.E) == 0 || sgn(det) == 0) raise(ErrorCode::SingularFrame, "E = 0 or EG - F^2 = 0");

  // z, w are needed to order 2k <= 8n; Delta K at order 8n needs rho at 8n + 4.
  const int top = 8 * n;
  const auto jets = curvatureJets(rho.truncated(top + 4));
  const Jet z = minusConstant(jets.K, frame.K0).truncated(top);
  const Jet w = minusConstant(jets.laplacianK, frame.laplacianK0).truncated(top);
  std::vector<Jet> zPowers{Jet::constant(Rational(1), top)};
  std::vector<Jet> wPowers{Jet::constant(Rational(1), top)};
  for (int i = 1; i <= 2 * (4 * n - n); ++i) {
    zPowers.push_back(multiply(zPowers.back(), z));
    wPowers.push_back(multiply(wPowers.back(), w));
  }

  // Delta^k(z^(2k-2n-p) w^p)|_0 does not depend on s.
  std::map<std::pair<int, int>, Rational> images;
  auto image = [&](int k, int p) -> const Rational& {
    auto it = images.find({k, p});
    if (it != images.end()) return it->second;
    const Jet product =
        multiplyAsPolynomials(zPowers[2 * k - 2 * n - p], wPowers[p], 2 * k);
    Rational value = evalOrigin(jets.laplacian.applyPower(product, k));
    return images.emplace(std::pair{k, p}, std::move(value)).first->second;
  };

  Rational total(0);
  for (const auto& [ks, grouped] : table.entries()) {
    const auto [k, s] = ks;
    if (sgn(grouped) == 0) continue;
    Rational inner(0);
    for (int p = 0; p <= 2 * s; ++p) {
      const Rational& img = image(k, p);
      if (sgn(img) == 0) continue;
      Rational term = Rational(binomial(static_cast<unsigned>(2 * s), static_cast<unsigned>(p))) *
                      power(frame.E, n - k + p) * power(frame.F, 2 * s - p) * img;
      inner += p % 2 == 0 ? term : Rational(-term);
    }
    total += grouped * inner / power(det, s);
  }
  return total;
}

HeatInvariantResult heatInvariantCurvatureForm(int n, const Jet& rho) {
  HeatInvariantResult r;
  r.n = n;
  r.form = PiScaled{heatInvariantCurvatureCoefficient(n, rho, HeatConstantTable(n)), 1};
  r.truncationOrder = curvatureOrderFor(n);
  r.path = EvaluationPath::Curvature;
  return r;
}

}  // namespace heatinv
