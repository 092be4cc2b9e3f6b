#include "heatinv/heat_constants.hpp"

#include <string>

#include "heatinv/error.hpp"

namespace heatinv {

namespace {

Rational fact(int n) { return Rational(factorial(static_cast<unsigned>(n))); }

std::string indexText(int n, int k, int s, int m) {
  return "(n,k,s,m) = (" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(s) + "," +
         std::to_string(m) + ")";
}

}  // namespace

Rational gammaHalfRational(int j) {
  if (j < 0) raise(ErrorCode::IndexOutOfRange, "gammaHalfRational needs j >= 0");
  Integer four;
  mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(j));
  Rational r(factorial(static_cast<unsigned>(2 * j)), four * factorial(static_cast<unsigned>(j)));
  r.canonicalize();
  return r;
}

PiScaled heatConstant(int n, int k, int s, int m) {
  if (n < 1 || m < n + 1 || m > 4 * n || k < n + 1 || k > m || s < 0 || s > k - n) {
    raise(ErrorCode::IndexOutOfRange, "heat constant index out of range " + indexText(n, k, s, m));
  }
  Rational sum(0);
  for (int l = 0; l <= m - k; ++l) {
    Rational term = gammaHalfRational(k + l - n - s) * gammaHalfRational(s + m - k - l);
    term /= fact(k) * fact(l) * fact(m - k - l) * fact(2 * k - 2 * n - 2 * s) * fact(2 * s);
    sum += term;
  }
  // (-1)^n / (4 pi^2) * pi * sum
  Rational q = sum / 4;
  if (n % 2 == 1) q = -q;
  return {q, 1};
}

PiScaled resolventMomentConstant(int m, int n, int p) {
  if (n < 1 || m <= n || p < 0 || p > m - n) {
    raise(ErrorCode::IndexOutOfRange, "resolvent moment index out of range (m,n,p) = (" + std::to_string(m) + "," +
                                          std::to_string(n) + "," + std::to_string(p) + ")");
  }
  // (-1)^(m-n) / (4 pi^2) * Gamma(m-n-p+1/2) Gamma(p+1/2) Gamma(n) / Gamma(m+1)
  Rational q = gammaHalfRational(m - n - p) * gammaHalfRational(p) * fact(n - 1) / (fact(m) * 4);
  if ((m - n) % 2 == 1) q = -q;
  return {q, 1};
}

HeatConstantTable::HeatConstantTable(int n) : n_(n) {
  if (n < 1) raise(ErrorCode::IndexOutOfRange, "heat invariants are indexed from n = 1");
  for (int k = n + 1; k <= 4 * n; ++k) {
    for (int s = 0; s <= k - n; ++s) {
      Rational total(0);
      for (int m = k; m <= 4 * n; ++m) total += heatConstant(n, k, s, m).q;
      grouped_.emplace(std::pair{k, s}, total);
    }
  }
}

const Rational& HeatConstantTable::grouped(int k, int s) const {
  auto it = grouped_.find({k, s});
  if (it == grouped_.end()) {
    raise(ErrorCode::IndexOutOfRange, "no grouped constant for (k,s) = (" + std::to_string(k) + "," +
                                          std::to_string(s) + ") at n = " + std::to_string(n_));
  }
  return it->second;
}

void HeatConstantTable::perturb(int k, int s, const Rational& delta) {
  auto it = grouped_.find({k, s});
  if (it == grouped_.end()) raise(ErrorCode::IndexOutOfRange, "perturb: unknown (k,s)");
  it->second += delta;
}

}  // namespace heatinv
