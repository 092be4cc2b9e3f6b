#pragma once

#include <map>
#include <utility>

#include "heatinv/pi_scaled.hpp"
#include "heatinv/rational.hpp"

namespace heatinv {

/// q with Gamma(j + 1/2) = q * sqrt(pi), i.e. (2j)! / (4^j j!).
Rational gammaHalfRational(int j);

/// C_nksm for n+1 <= m <= 4n, n+1 <= k <= m, 0 <= s <= k-n. Always a rational
/// multiple of 1/pi: the two half-integer Gamma factors supply one pi against
/// the 1/(4 pi^2) prefactor.
PiScaled heatConstant(int n, int k, int s, int m);

/// I_mnp divided by rho0^(m-n+1): the coefficient of (-lambda)^(-n) in the
/// (alpha1, alpha2) = (2m-2n-2p, 2p) derivative of the frozen resolvent power
/// F^(m+1) on the diagonal. Requires n >= 1, m > n, 0 <= p <= m-n.
PiScaled resolventMomentConstant(int m, int n, int p);

/// The master-formula constants for one n, grouped over m:
///   G(k, s) = sum_{m=k}^{4n} C_nksm   (stored as the coefficient of 1/pi).
class HeatConstantTable {
 public:
  explicit HeatConstantTable(int n);

  int n() const { return n_; }
  const Rational& grouped(int k, int s) const;
  const std::map<std::pair<int, int>, Rational>& entries() const { return grouped_; }

  /// Adds delta to one grouped constant. Exists for mutation tests.
  void perturb(int k, int s, const Rational& delta);

 private:
  int n_;
  std::map<std::pair<int, int>, Rational> grouped_;
};

}  // namespace heatinv
