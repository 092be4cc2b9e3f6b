#include "heatinv/rho_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace heatinv {

RhoMonomial RhoMonomial::variable(int a, int b) {
  if (a == 0 && b == 0) return rho00Power(1);
  RhoMonomial m;
  m.factors_.push_back({Exponent2{a, b}, 1});
  return m;
}

RhoMonomial RhoMonomial::rho00Power(int exponent) {
  RhoMonomial m;
  m.rho00_ = exponent;
  return m;
}

RhoMonomial RhoMonomial::fromFactors(int rho00Exponent, const std::vector<Factor>& factors) {
  RhoMonomial m;
  m.rho00_ = rho00Exponent;
  std::map<Exponent2, int> merged;
  for (const auto& [var, e] : factors) {
    if (var.degree() == 0) {
      m.rho00_ += e;
    } else {
      merged[var] += e;
    }
  }
  for (const auto& [var, e] : merged) {
    if (e < 0) throw std::invalid_argument("negative exponent on a non-constant rho variable");
    if (e > 0) m.factors_.push_back({var, e});
  }
  return m;
}

int RhoMonomial::weight() const {
  int w = 0;
  for (const auto& [var, e] : factors_) w += var.degree() * e;
  return w;
}

int RhoMonomial::degree() const {
  int d = rho00_;
  for (const auto& f : factors_) d += f.second;
  return d;
}

RhoMonomial RhoMonomial::operator*(const RhoMonomial& other) const {
  RhoMonomial r;
  r.rho00_ = rho00_ + other.rho00_;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.push_back({i->first, i->second + j->second});
      ++i;
      ++j;
    }
  }
  return r;
}

RhoPoly::RhoPoly(const Rational& constant) { addTerm(RhoMonomial{}, constant); }

RhoPoly::RhoPoly(const RhoMonomial& m, const Rational& coeff) { addTerm(m, coeff); }

void RhoPoly::addTerm(const RhoMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int RhoPoly::denomPower() const {
  int e = 0;
  for (const auto& [m, c] : terms_) e = std::max(e, -m.rho00Exponent());
  return e;
}

RhoPoly RhoPoly::numerator() const {
  return *this * RhoPoly(RhoMonomial::rho00Power(denomPower()), Rational(1));
}

std::optional<RhoPoly> RhoPoly::unitInverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  if (!m.isPureRho00()) return std::nullopt;
  return RhoPoly(RhoMonomial::rho00Power(-m.rho00Exponent()), Rational(1) / c);
}

RhoPoly& RhoPoly::operator+=(const RhoPoly& other) {
  for (const auto& [m, c] : other.terms_) addTerm(m, c);
  return *this;
}

RhoPoly& RhoPoly::operator-=(const RhoPoly& other) {
  for (const auto& [m, c] : other.terms_) addTerm(m, -c);
  return *this;
}

RhoPoly operator*(const RhoPoly& a, const RhoPoly& b) {
  RhoPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.addTerm(ma * mb, ca * cb);
  }
  return r;
}

RhoPoly operator-(const RhoPoly& a) { return a.scaled(Rational(-1)); }

RhoPoly RhoPoly::scaled(const Rational& q) const {
  RhoPoly r;
  if (sgn(q) == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, c] : r.terms_) c *= q;
  return r;
}

Jet2D<RhoPoly> symbolicRhoJet(int order) {
  Jet2D<RhoPoly> j(order);
  for (int d = 0; d <= order; ++d) {
    for (int a = d; a >= 0; --a) j.accumulate(a, d - a, RhoPoly::variable(a, d - a));
  }
  return j;
}

Rational substitute(const RhoPoly& p, const Jet2D<Rational>& rho) {
  const Rational rho00 = rho.coefficient(0, 0);
  Rational total(0);
  for (const auto& [m, c] : p.terms()) {
    Rational value = c * power(rho00, m.rho00Exponent());
    for (const auto& [var, e] : m.factors()) value *= power(rho.coefficient(var.u, var.v), e);
    total += value;
  }
  return total;
}

}  // namespace heatinv
