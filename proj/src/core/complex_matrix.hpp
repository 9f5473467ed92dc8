#pragma once

#include <vector>

#include "rational.hpp"

namespace ckcoh {

// Square complex matrix with exact rational real and imaginary parts.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int size = 0);

  int size() const { return n_; }
  Rational& re(int r, int c) { return re_[idx(r, c)]; }
  Rational& im(int r, int c) { return im_[idx(r, c)]; }
  const Rational& re(int r, int c) const { return re_[idx(r, c)]; }
  const Rational& im(int r, int c) const { return im_[idx(r, c)]; }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix scaled(const Rational& s) const;
  ComplexMatrix conjugate_transpose() const;
  // Real and imaginary part of the trace.
  std::pair<Rational, Rational> trace() const;
  bool is_zero() const;

  static ComplexMatrix diagonal(const std::vector<Rational>& d);

  friend ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
    return x * y - y * x;
  }
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r * n_ + c); }

  int n_;
  std::vector<Rational> re_;
  std::vector<Rational> im_;
};

}  // namespace ckcoh
