#include "heatinv/pi_scaled.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heatinv {

PiScaled& PiScaled::operator+=(const PiScaled& other) {
  if (other.isZero()) return *this;
  if (isZero()) {
    *this = other;
    return *this;
  }
  if (piPower != other.piPower) throw std::domain_error("adding PiScaled values with different pi powers");
  q += other.q;
  return *this;
}

std::string toString(const PiScaled& x) {
  if (x.isZero()) return "0";
  if (x.piPower == 0) return toString(x.q);
  std::string pi = x.piPower == 1 ? "pi" : "pi^" + std::to_string(x.piPower);
  std::string num = x.q.get_num().get_str();
  if (x.q.get_den() == 1) return num + "/" + pi;
  return num + "/(" + x.q.get_den().get_str() + "*" + pi + ")";
}

std::string toDecimal(const PiScaled& x, int digits) {
  digits = std::max(digits, 1);
  const auto bits = static_cast<mpfr_prec_t>(digits * 3.33 + 32);
  mpfr_t value;
  mpfr_t pi;
  mpfr_init2(value, bits);
  mpfr_init2(pi, bits);
  mpfr_set_q(value, x.q.get_mpq_t(), MPFR_RNDN);
  if (x.piPower != 0) {
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_pow_si(pi, pi, x.piPower, MPFR_RNDN);
    mpfr_div(value, value, pi, MPFR_RNDN);
  }
  char* text = nullptr;
  mpfr_asprintf(&text, "%.*Rg", digits, value);
  std::string out(text);
  mpfr_free_str(text);
  mpfr_clear(pi);
  mpfr_clear(value);
  return out;
}

double toDouble(const PiScaled& x) {
  return x.q.get_d() / std::pow(3.14159265358979323846, x.piPower);
}

}  // namespace heatinv
