#pragma once

// Multiple commutators [B, A; J] and the operators
//   X_m = sum over J in V_m of [B, A; J],   V_m = { J : |J| + r = m },
// with the recurrence and closed-form evaluations of X_m.

#include <concepts>
#include <cstdint>
#include <numeric>
#include <vector>

#include "heatinv/rational.hpp"

namespace heatinv {

template <class T>
concept OperatorAlgebra = std::copyable<T> && std::equality_comparable<T> &&
                          requires(const T& a, const T& b, const Rational& q) {
                            { a + b } -> std::convertible_to<T>;
                            { a - b } -> std::convertible_to<T>;
                            { a * b } -> std::convertible_to<T>;
                            { scale(a, q) } -> std::convertible_to<T>;
                            { identityLike(a) } -> std::convertible_to<T>;
                          };

/// J = (j_1, ..., j_r), all entries >= 0, r >= 1.
struct CommutatorIndex {
  std::vector<int> entries;

  int length() const { return static_cast<int>(entries.size()); }
  int total() const { return std::accumulate(entries.begin(), entries.end(), 0); }
  /// |J| + r: the filtration level.
  int filtrationWeight() const { return total() + length(); }

  bool operator==(const CommutatorIndex&) const = default;
};

/// All J with |J| + r = m, by length r and then weak compositions of m - r.
std::vector<CommutatorIndex> filtrationLevel(int m);

template <OperatorAlgebra T>
T commutator(const T& x, const T& a) {
  return x * a - a * x;
}

/// [x, A; j] for a single entry: j-fold bracketing with A on the right.
template <OperatorAlgebra T>
T iteratedCommutator(T x, const T& a, int j) {
  for (int i = 0; i < j; ++i) x = commutator(x, a);
  return x;
}

/// [B,A;(j)] = [[B,A;j-1],A] and [B,A;J u j] = [B [B,A;J], A; j].
template <OperatorAlgebra T>
T multipleCommutator(const T& b, const T& a, const CommutatorIndex& index) {
  T acc = iteratedCommutator(b, a, index.entries.at(0));
  for (std::size_t i = 1; i < index.entries.size(); ++i) acc = iteratedCommutator(T(b * acc), a, index.entries[i]);
  return acc;
}

template <OperatorAlgebra T>
T xOperatorBySum(const T& b, const T& a, int m) {
  auto level = filtrationLevel(m);
  T sum = scale(b, Rational(0));
  for (const auto& index : level) sum = sum + multipleCommutator(b, a, index);
  return sum;
}

/// X_1 = B, X_m = B X_{m-1} + [X_{m-1}, A].
template <OperatorAlgebra T>
T xOperatorRecurrence(const T& b, const T& a, int m) {
  T x = b;
  for (int i = 2; i <= m; ++i) x = b * x + commutator(x, a);
  return x;
}

/// X_m = sum_k (-1)^k C(m,k) (A - B)^k A^(m-k).
template <OperatorAlgebra T>
T xOperatorClosed(const T& b, const T& a, int m) {
  const T diff = a - b;
  std::vector<T> aPowers{identityLike(a)};
  for (int i = 1; i <= m; ++i) aPowers.push_back(aPowers.back() * a);
  T diffPower = identityLike(a);
  T sum = scale(a, Rational(0));
  for (int k = 0; k <= m; ++k) {
    Rational coeff(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)));
    if (k % 2 == 1) coeff = -coeff;
    sum = sum + scale(T(diffPower * aPowers[m - k]), coeff);
    diffPower = diffPower * diff;
  }
  return sum;
}

/// The resolvent-expansion form: X_0 = I, X_m = X_{m-1} H0 - H X_{m-1}.
/// Equals xOperatorRecurrence(H0 - H, H0, m) for m >= 1.
template <OperatorAlgebra T>
T xOperatorResolventForm(const T& h0, const T& h, int m) {
  T x = identityLike(h0);
  for (int i = 1; i <= m; ++i) x = x * h0 - h * x;
  return x;
}

}  // namespace heatinv
