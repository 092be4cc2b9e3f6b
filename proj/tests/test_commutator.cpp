#include <doctest.h>

#include <random>
#include <set>

#include "heatinv/commutator.hpp"
#include "heatinv/rational_matrix.hpp"
#include "heatinv/verification.hpp"

using namespace heatinv;
using M = RationalMatrix;

namespace {

M diagonal(std::initializer_list<Rational> d) {
  M m(d.size());
  std::size_t i = 0;
  for (const auto& x : d) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

M power(const M& a, int e) {
  M r = M::identity(a.dim());
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

}  // namespace

TEST_CASE("multiple commutator rules") {
  std::mt19937_64 rng(31);
  const M a = verify::randomMatrix(rng, 3);
  const M b = verify::randomMatrix(rng, 3);
  CHECK(multipleCommutator(b, a, {{0}}) == b);
  CHECK(multipleCommutator(b, a, {{1}}) == b * a - a * b);
  CHECK(multipleCommutator(b, a, {{0, 0}}) == b * b);
  CHECK(multipleCommutator(b, a, {{2}}) == commutator(commutator(b, a), a));
  CHECK(multipleCommutator(b, a, {{1, 1}}) == commutator(M(b * commutator(b, a)), a));

  const M d1 = diagonal({1, 2, 3});
  const M d2 = diagonal({Rational(1, 2), 5, -1});
  CHECK(multipleCommutator(d2, d1, {{1}}) == M(3));
}

TEST_CASE("low levels by hand") {
  std::mt19937_64 rng(32);
  const M a = verify::randomMatrix(rng, 3);
  const M b = verify::randomMatrix(rng, 3);
  CHECK(xOperatorBySum(b, a, 1) == b);
  CHECK(xOperatorRecurrence(b, a, 1) == b);
  CHECK(xOperatorClosed(b, a, 1) == b);
  const M x2 = b * a - a * b + b * b;
  CHECK(xOperatorBySum(b, a, 2) == x2);
  CHECK(xOperatorRecurrence(b, a, 2) == x2);
  CHECK(xOperatorClosed(b, a, 2) == x2);
  CHECK(xOperatorRecurrence(b, b, 2) == b * b);
}

TEST_CASE("commuting arguments give B^m") {
  const M a = diagonal({2, Rational(-1, 3), 5});
  const M b = diagonal({Rational(1, 2), 4, -2});
  for (int m = 1; m <= 6; ++m) {
    CHECK(xOperatorClosed(b, a, m) == power(b, m));
    CHECK(xOperatorBySum(b, a, m) == power(b, m));
  }
}

TEST_CASE("filtration levels") {
  for (int m = 1; m <= 10; ++m) {
    const auto level = filtrationLevel(m);
    CHECK(level.size() == (std::size_t{1} << (m - 1)));
    std::set<std::vector<int>> distinct;
    for (const auto& j : level) {
      CHECK(j.filtrationWeight() == m);
      for (int e : j.entries) CHECK(e >= 0);
      distinct.insert(j.entries);
    }
    CHECK(distinct.size() == level.size());
  }
  CHECK(filtrationLevel(1).front() == CommutatorIndex{{0}});
}

TEST_CASE("property: three formulations agree on random matrices") {
  std::mt19937_64 rng(33);
  for (int dim = 3; dim <= 5; ++dim) {
    const M a = verify::randomMatrix(rng, dim);
    const M b = verify::randomMatrix(rng, dim);
    for (int m = 1; m <= 8; ++m) {
      const M rec = xOperatorRecurrence(b, a, m);
      CHECK(rec == xOperatorClosed(b, a, m));
      if (m <= 5) CHECK(rec == xOperatorBySum(b, a, m));
    }
  }
}

TEST_CASE("property: resolvent recurrence with A = H0, B = H0 - H") {
  std::mt19937_64 rng(34);
  const M h0 = verify::randomMatrix(rng, 4);
  const M h = verify::randomMatrix(rng, 4);
  CHECK(xOperatorResolventForm(h0, h, 0) == M::identity(4));
  for (int m = 1; m <= 8; ++m) CHECK(xOperatorResolventForm(h0, h, m) == xOperatorRecurrence(M(h0 - h), h0, m));
}
