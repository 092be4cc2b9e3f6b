#include <doctest.h>

#include <random>

#include "heatinv/error.hpp"
#include "heatinv/laplace.hpp"
#include "heatinv/metric_spec.hpp"
#include "heatinv/verification.hpp"

using namespace heatinv;
using Jet = Jet2D<Rational>;

namespace {

Jet jetOf(int order, std::initializer_list<std::tuple<int, int, Rational>> terms) {
  Jet j(order);
  for (const auto& [a, b, c] : terms) j.accumulate(a, b, c);
  return j;
}

Jet unitSphere(int order) {
  MetricSpec spec;
  spec.kind = MetricKind::SphereStereographic;
  return expandNumeric(spec, order);
}

}  // namespace

TEST_CASE("flat Laplacian on simple monomials") {
  const ConformalLaplacian<Rational> L(Jet::constant(Rational(1), 4), 4);
  CHECK(L.apply(jetOf(2, {{2, 0, 1}, {0, 2, 1}})) == Jet::constant(Rational(-4), 0));
  CHECK(L.apply(jetOf(4, {{1, 1, 1}})).isZero());
  CHECK(L.applyPower(jetOf(4, {{2, 2, 1}}), 2) == Jet::constant(Rational(8), 0));
}

TEST_CASE("variable coefficient: rho = 1/(1-u)") {
  const Jet rho = inverse(jetOf(3, {{0, 0, 1}, {1, 0, -1}}));
  const ConformalLaplacian<Rational> L(rho, 3);
  const Jet out = L.apply(jetOf(3, {{2, 0, 1}}));
  CHECK(out.order() == 1);
  CHECK(out == jetOf(1, {{0, 0, -2}, {1, 0, 2}}));
}

TEST_CASE("sphere chart: Delta(u^2 + v^2) at the origin") {
  const ConformalLaplacian<Rational> L(unitSphere(4), 4);
  CHECK(evalOrigin(L.apply(jetOf(4, {{2, 0, 1}, {0, 2, 1}}))) == -1);
}

TEST_CASE("low-degree monomials are annihilated by high powers on a constant metric") {
  const ConformalLaplacian<Rational> L(Jet::constant(Rational(3), 10), 10);
  CHECK(L.applyPower(jetOf(10, {{3, 2, 1}}), 3).isZero());
}

TEST_CASE("frozen operator") {
  const FrozenLaplacian<Rational> one(Rational(1));
  CHECK(one.apply(jetOf(2, {{2, 0, 1}})) == Jet::constant(Rational(-2), 0));
  const Jet f = jetOf(4, {{1, 2, 5}});
  CHECK(one.applyPower(f, 0) == f);
  const FrozenLaplacian<Rational> two(Rational(2));
  CHECK(two.applyPower(jetOf(4, {{4, 0, 1}}), 2) == Jet::constant(Rational(6), 0));
  CHECK_THROWS_AS(FrozenLaplacian<Rational>(Rational(0)), Error);
}

TEST_CASE("order bookkeeping") {
  const ConformalLaplacian<Rational> L(Jet::constant(Rational(1), 4), 4);
  CHECK_THROWS_AS(L.apply(Jet(1)), Error);
  CHECK_THROWS_AS(L.applyPower(Jet(3), 2), Error);
  // Output order 6 exceeds the working order 4.
  CHECK_THROWS_AS(L.apply(Jet(8)), Error);
  CHECK_THROWS_AS(ConformalLaplacian<Rational>(Jet::constant(Rational(1), 2), 4), Error);
  CHECK(L.applyPower(Jet::monomial(2, 2, 6), 2).order() == 2);
}

TEST_CASE("property: linearity") {
  std::mt19937_64 rng(21);
  const Jet rho = verify::randomRhoJet(rng, 6);
  const ConformalLaplacian<Rational> L(rho, 6);
  const Jet f = verify::randomRhoJet(rng, 8);
  const Jet g = verify::randomRhoJet(rng, 8);
  const Rational a(3, 7);
  const Rational b(-2);
  CHECK(L.apply(add(scaled(f, a), scaled(g, b))) == add(scaled(L.apply(f), a), scaled(L.apply(g), b)));
}

TEST_CASE("property: frozen and full operators agree for constant rho") {
  const Rational c(5, 2);
  const ConformalLaplacian<Rational> L(Jet::constant(c, 12), 12);
  const FrozenLaplacian<Rational> L0(c);
  std::mt19937_64 rng(22);
  const Jet f = verify::randomRhoJet(rng, 12);
  for (int k = 0; k <= 5; ++k) CHECK(L.applyPower(f, k) == L0.applyPower(f, k));
}

TEST_CASE("property: graded operator reproduces the exact origin values") {
  std::mt19937_64 rng(23);
  const Jet rho = verify::randomRhoJet(rng, 16);
  for (int n = 1; n <= 2; ++n) {
    const auto graded = ConformalLaplacian<Rational>::graded(rho, 2 * n);
    const ConformalLaplacian<Rational> exact(rho, 8 * n);
    for (int k = n + 1; k <= 4 * n; ++k) {
      for (int s = 0; s <= k - n; ++s) {
        const Jet m = Jet::monomial(2 * k - 2 * n - 2 * s, 2 * s, 2 * k);
        CHECK(evalOrigin(graded.applyPower(m, k)) == evalOrigin(exact.applyPower(m, k)));
      }
    }
  }
}

TEST_CASE("Gaussian curvature") {
  CHECK(gaussianCurvatureJet(Jet::constant(Rational(7, 3), 6)).isZero());
  const Jet K = gaussianCurvatureJet(unitSphere(10));
  CHECK(K.order() == 8);
  CHECK(K == Jet::constant(Rational(1), 8));

  MetricSpec sphere2;
  sphere2.kind = MetricKind::SphereStereographic;
  sphere2.radius = Rational(3, 2);
  CHECK(gaussianCurvatureJet(expandNumeric(sphere2, 8)) == Jet::constant(Rational(4, 9), 6));
}
