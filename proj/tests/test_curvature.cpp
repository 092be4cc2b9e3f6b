#include <doctest.h>

#include <random>

#include "heatinv/curvature.hpp"
#include "heatinv/error.hpp"
#include "heatinv/heat_invariant.hpp"
#include "heatinv/metric_spec.hpp"
#include "heatinv/verification.hpp"

using namespace heatinv;
using Jet = Jet2D<Rational>;

namespace {

Jet unitSphere(int order) {
  MetricSpec spec;
  spec.kind = MetricKind::SphereStereographic;
  return expandNumeric(spec, order);
}

void expectCode(auto&& fn, ErrorCode code) {
  try {
    fn();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

bool usable(const CurvatureFrame& f) {
  return !f.degenerate && sgn(f.E) != 0 && sgn(f.E * f.G - f.F * f.F) != 0;
}

}  // namespace

TEST_CASE("constant curvature is degenerate") {
  const CurvatureFrame sphere = curvatureFrame(unitSphere(8));
  CHECK(sphere.K0 == 1);
  CHECK(sgn(sphere.laplacianK0) == 0);
  CHECK(sphere.degenerate);
  const CurvatureFrame flat = curvatureFrame(Jet::constant(Rational(1), 8));
  CHECK(sgn(flat.K0) == 0);
  CHECK(flat.degenerate);
  expectCode([] { heatInvariantCurvatureForm(1, unitSphere(14)); }, ErrorCode::DegenerateCurvatureCoordinates);
}

TEST_CASE("random jets are nondegenerate") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) CHECK_FALSE(curvatureFrame(verify::randomRhoJet(rng, 8)).degenerate);
}

TEST_CASE("a generic cubic term breaks degeneracy") {
  // rho = 2 + u + u^2/3 has K depending on u alone.
  Jet base = Jet::constant(Rational(2), 8);
  base.accumulate(1, 0, Rational(1));
  base.accumulate(2, 0, Rational(1, 3));
  REQUIRE(curvatureFrame(base).degenerate);
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 10; ++trial) {
    Jet rho = base;
    for (int a = 0; a <= 3; ++a) rho.accumulate(a, 3 - a, verify::randomRational(rng));
    CHECK_FALSE(curvatureFrame(rho).degenerate);
  }
}

TEST_CASE("cubic and quartic terms cannot break a rotationally symmetric 2-jet") {
  // dK(0) has weight 3 and d(Delta K)(0) weight 5. With no linear term and a
  // radial quadratic part both are the same equivariant image of the cubic
  // part, hence parallel; only quintic terms can separate them.
  std::mt19937_64 rng(57);
  for (const Jet& base : {unitSphere(8), Jet::constant(Rational(1), 8)}) {
    Jet rho = base;
    for (int d = 3; d <= 4; ++d) {
      for (int a = 0; a <= d; ++a) rho.accumulate(a, d - a, verify::randomRational(rng));
    }
    CHECK(curvatureFrame(rho).degenerate);
    for (int a = 0; a <= 5; ++a) rho.accumulate(a, 5 - a, verify::randomRational(rng));
    CHECK_FALSE(curvatureFrame(rho).degenerate);
  }
}

TEST_CASE("frame identities hold exactly") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 5; ++trial) {
    const Jet rho = verify::randomRhoJet(rng, 10);
    const CurvatureFrame frame = curvatureFrame(rho);
    const FrameCoefficients fromIdentities = frameFromCurvatureIdentities(rho);
    CHECK(fromIdentities == FrameCoefficients{frame.E, frame.F, frame.G});
  }
}

TEST_CASE("conformal factor at the point") {
  CurvatureFrame f;
  f.E = 1;
  f.F = 0;
  f.G = 1;
  CHECK(conformalFactorAtPoint(f) == 1);
  f.E = 2;
  CHECK(conformalFactorAtPoint(f) == Rational(1, 4));
  f.E = 0;
  expectCode([&] { conformalFactorAtPoint(f); }, ErrorCode::SingularFrame);
  f.E = 1;
  f.F = 1;
  expectCode([&] { conformalFactorAtPoint(f); }, ErrorCode::SingularFrame);
}

TEST_CASE("curvature form equals the direct sum for n = 1") {
  std::mt19937_64 rng(53);
  const HeatConstantTable table(1);
  int checked = 0;
  while (checked < 6) {
    const Jet rho = verify::randomRhoJet(rng, curvatureOrderFor(1), 3);
    if (!usable(curvatureFrame(rho))) continue;
    CHECK(heatInvariantCurvatureCoefficient(1, rho, table) == heatInvariantCoefficient(1, rho));
    ++checked;
  }
}

TEST_CASE("curvature form equals the direct sum for n = 2") {
  std::mt19937_64 rng(54);
  Jet rho = verify::randomRhoJet(rng, curvatureOrderFor(2), 2);
  while (!usable(curvatureFrame(rho))) rho = verify::randomRhoJet(rng, curvatureOrderFor(2), 2);
  const auto result = heatInvariantCurvatureForm(2, rho);
  CHECK(result.path == EvaluationPath::Curvature);
  CHECK((result.numeric() == heatInvariant(2, rho).numeric()));
}

TEST_CASE("order requirements") {
  expectCode([] { curvatureFrame(Jet::constant(Rational(1), 7)); }, ErrorCode::OrderExhausted);
  std::mt19937_64 rng(55);
  const Jet rho = verify::randomRhoJet(rng, curvatureOrderFor(1) - 1);
  expectCode([&] { heatInvariantCurvatureForm(1, rho); }, ErrorCode::OrderExhausted);
  CHECK(curvatureOrderFor(1) == 14);
}
