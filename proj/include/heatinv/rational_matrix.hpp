#pragma once

#include <cstddef>
#include <vector>

#include "heatinv/rational.hpp"

namespace heatinv {

/// Dense square matrix over Q; the concrete non-commutative algebra used to
/// exercise the commutator calculus.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t dim = 0) : dim_(dim), entries_(dim * dim, Rational(0)) {}

  static RationalMatrix identity(std::size_t dim) {
    RationalMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = a.entries_[i] + b.entries_[i];
    return r;
  }

  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = a.entries_[i] - b.entries_[i];
    return r;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        if (sgn(a(i, k)) == 0) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    }
    return r;
  }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<Rational> entries_;
};

inline RationalMatrix scale(const RationalMatrix& m, const Rational& q) {
  RationalMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = m(i, j) * q;
  }
  return r;
}

inline RationalMatrix identityLike(const RationalMatrix& m) { return RationalMatrix::identity(m.dim()); }

}  // namespace heatinv
