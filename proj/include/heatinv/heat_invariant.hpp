#pragma once

// Heat invariants a_n(x) of a surface in a conformal chart centred at x.
//
// Direct evaluation:
//   a_n = sum_{m=n+1}^{4n} sum_{k=n+1}^{m} sum_{s=0}^{k-n}
//           C_nksm * rho0^(k-n) * Delta^k(u^(2k-2n-2s) v^(2s)) |_0
// regrouped as sum_{k,s} G(k,s) * rho0^(k-n) * Delta^k(...)|_0.
//
// Resolvent evaluation (independent cross-check, expands the commutator
// operators X_m = sum_k (-1)^k C(m,k) Delta^k Delta0^(m-k) explicitly):
//   a_n = rho0^-1 / (n-1)! * sum_{m=n+1}^{4n} sum_{k=0}^{m} (-1)^k C(m,k)
//           Delta^k Delta0^(m-k) P_m |_0,
//   P_m = sum_p I_mnp u^(2m-2n-2p) v^(2p) / ((2m-2n-2p)! (2p)!).
//
// Both evaluators return the coefficient of 1/pi. a_n depends only on the
// 2n-jet of rho.

#include <atomic>
#include <functional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "heatinv/error.hpp"
#include "heatinv/heat_constants.hpp"
#include "heatinv/jet.hpp"
#include "heatinv/laplace.hpp"
#include "heatinv/pi_scaled.hpp"
#include "heatinv/rho_poly.hpp"

namespace heatinv {

enum class EvaluationPath { Direct, Resolvent, Curvature };

/// CLI names: "eq311", "eq310", "curvature".
std::string_view pathName(EvaluationPath path);
std::optional<EvaluationPath> parsePath(std::string_view name);

/// poly * pi^(-piPower), poly in the Taylor coefficients rho_ab.
struct ClosedForm {
  RhoPoly poly;
  int piPower = 1;

  bool operator==(const ClosedForm&) const = default;
};

struct HeatInvariantResult {
  int n = 0;
  std::variant<ClosedForm, PiScaled> form;
  int truncationOrder = 0;
  EvaluationPath path = EvaluationPath::Direct;

  bool isClosedForm() const { return std::holds_alternative<ClosedForm>(form); }
  const ClosedForm& closedForm() const { return std::get<ClosedForm>(form); }
  const PiScaled& numeric() const { return std::get<PiScaled>(form); }
};

struct EvaluationOptions {
  unsigned threads = 1;
};

/// Highest Taylor degree of the monomial jets fed to Delta^k (k <= 4n).
inline int workingOrderFor(int n) { return 8 * n; }

PiScaled substitute(const ClosedForm& form, const Jet2D<Rational>& rho);

namespace detail {

/// Evaluates fn(0..count-1) on up to `threads` workers; results keep index order.
template <class T>
std::vector<T> parallelMap(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      if (failed) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(count));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <CoefficientRing C>
C ringPower(const C& base, int exponent) {
  C r{Rational(1)};
  for (int i = 0; i < exponent; ++i) r = C{r * base};
  return r;
}

inline void requireHeatInput(int n, int rhoOrder) {
  if (n < 1) raise(ErrorCode::IndexOutOfRange, "heat invariants a_n are computed for n >= 1");
  requireOrder(rhoOrder, 2 * n, "heatInvariant");
}

}  // namespace detail

/// Coefficient of 1/pi in a_n by the direct (grouped) sum.
template <CoefficientRing C>
C heatInvariantCoefficient(int n, const Jet2D<C>& rho, const HeatConstantTable& table,
                           const EvaluationOptions& options = {}) {
  detail::requireHeatInput(n, rho.order());
  if (table.n() != n) raise(ErrorCode::IndexOutOfRange, "constant table built for a different n");
  const auto laplacian = ConformalLaplacian<C>::graded(rho, 2 * n);
  const C rho0 = rho.coefficient(0, 0);

  std::vector<std::pair<int, int>> terms;
  for (const auto& entry : table.entries()) terms.push_back(entry.first);

  auto values = detail::parallelMap<C>(terms.size(), options.threads, [&](std::size_t i) {
    const auto [k, s] = terms[i];
    const auto image = laplacian.applyPower(Jet2D<C>::monomial(2 * k - 2 * n - 2 * s, 2 * s, 2 * k), k);
    const C value = evalOrigin(image);
    if (isZero(value)) return value;
    return C{scale(C{value * detail::ringPower(rho0, k - n)}, table.grouped(k, s))};
  });

  C total{Rational(0)};
  for (const auto& v : values) total += v;
  return total;
}

template <CoefficientRing C>
C heatInvariantCoefficient(int n, const Jet2D<C>& rho, const EvaluationOptions& options = {}) {
  return heatInvariantCoefficient(n, rho, HeatConstantTable(n), options);
}

/// Coefficient of 1/pi in a_n by the resolvent-expansion sum.
template <CoefficientRing C>
C heatInvariantResolventCoefficient(int n, const Jet2D<C>& rho, const EvaluationOptions& options = {}) {
  detail::requireHeatInput(n, rho.order());
  const auto laplacian = ConformalLaplacian<C>::graded(rho, 2 * n);
  const C rho0 = rho.coefficient(0, 0);
  const FrozenLaplacian<C> frozen(rho0);

  std::vector<std::pair<int, int>> terms;
  for (int m = n + 1; m <= 4 * n; ++m) {
    for (int k = 0; k <= m; ++k) terms.emplace_back(m, k);
  }

  auto values = detail::parallelMap<C>(terms.size(), options.threads, [&](std::size_t i) {
    const auto [m, k] = terms[i];
    Jet2D<C> moments(2 * m);
    const C rho0Power = detail::ringPower(rho0, m - n + 1);
    for (int p = 0; p <= m - n; ++p) {
      const int a = 2 * m - 2 * n - 2 * p;
      const int b = 2 * p;
      Rational c = resolventMomentConstant(m, n, p).q;
      c /= Rational(factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b)));
      moments.accumulate(a, b, scale(rho0Power, c));
    }
    const auto image = laplacian.applyPower(frozen.applyPower(moments, m - k), k);
    Rational sign(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)));
    if (k % 2 == 1) sign = -sign;
    return C{scale(evalOrigin(image), sign)};
  });

  C total{Rational(0)};
  for (const auto& v : values) total += v;
  const std::optional<C> invRho0 = invertUnit(rho0);
  if (!invRho0) raise(ErrorCode::NonInvertibleConstantTerm, "rho(0,0) is not invertible");
  return C{scale(C{total * *invRho0}, Rational(1) / Rational(factorial(static_cast<unsigned>(n - 1))))};
}

namespace detail {

inline HeatInvariantResult wrap(int n, Rational value, EvaluationPath path) {
  return {n, PiScaled{std::move(value), 1}, workingOrderFor(n), path};
}

inline HeatInvariantResult wrap(int n, RhoPoly value, EvaluationPath path) {
  return {n, ClosedForm{std::move(value), 1}, workingOrderFor(n), path};
}

}  // namespace detail

/// a_n with a numeric (PiScaled) result for rational jets and a closed form
/// for RhoPoly jets.
template <CoefficientRing C>
HeatInvariantResult heatInvariant(int n, const Jet2D<C>& rho, const EvaluationOptions& options = {}) {
  return detail::wrap(n, heatInvariantCoefficient(n, rho, options), EvaluationPath::Direct);
}

template <CoefficientRing C>
HeatInvariantResult heatInvariant(int n, const Jet2D<C>& rho, const HeatConstantTable& table,
                                  const EvaluationOptions& options = {}) {
  return detail::wrap(n, heatInvariantCoefficient(n, rho, table, options), EvaluationPath::Direct);
}

template <CoefficientRing C>
HeatInvariantResult heatInvariantResolvent(int n, const Jet2D<C>& rho, const EvaluationOptions& options = {}) {
  return detail::wrap(n, heatInvariantResolventCoefficient(n, rho, options), EvaluationPath::Resolvent);
}

/// The n = 0 coefficient is not produced by the sums above; it is the leading
/// Weyl term 1/(4 pi) in dimension two.
inline PiScaled weylLeadingTerm() { return {Rational(1, 4), 1}; }

}  // namespace heatinv
