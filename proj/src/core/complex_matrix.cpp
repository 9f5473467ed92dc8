#include "complex_matrix.hpp"

namespace ckcoh {

ComplexMatrix::ComplexMatrix(int size)
    : n_(size),
      re_(static_cast<std::size_t>(size * size)),
      im_(static_cast<std::size_t>(size * size)) {}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  ComplexMatrix out(n_);
  for (std::size_t i = 0; i < re_.size(); ++i) {
    out.re_[i] = re_[i] + o.re_[i];
    out.im_[i] = im_[i] + o.im_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  ComplexMatrix out(n_);
  for (std::size_t i = 0; i < re_.size(); ++i) {
    out.re_[i] = re_[i] - o.re_[i];
    out.im_[i] = im_[i] - o.im_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  ComplexMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) {
      const Rational& ar = re(r, k);
      const Rational& ai = im(r, k);
      if (ar == 0 && ai == 0) continue;
      for (int c = 0; c < n_; ++c) {
        const Rational& br = o.re(k, c);
        const Rational& bi = o.im(k, c);
        if (br == 0 && bi == 0) continue;
        out.re(r, c) += ar * br - ai * bi;
        out.im(r, c) += ar * bi + ai * br;
      }
    }
  return out;
}

ComplexMatrix ComplexMatrix::scaled(const Rational& s) const {
  ComplexMatrix out(*this);
  for (auto& x : out.re_) x *= s;
  for (auto& x : out.im_) x *= s;
  return out;
}

ComplexMatrix ComplexMatrix::conjugate_transpose() const {
  ComplexMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      out.re(c, r) = re(r, c);
      out.im(c, r) = -im(r, c);
    }
  return out;
}

std::pair<Rational, Rational> ComplexMatrix::trace() const {
  Rational tr, ti;
  for (int i = 0; i < n_; ++i) {
    tr += re(i, i);
    ti += im(i, i);
  }
  return {tr, ti};
}

bool ComplexMatrix::is_zero() const {
  for (std::size_t i = 0; i < re_.size(); ++i)
    if (re_[i] != 0 || im_[i] != 0) return false;
  return true;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Rational>& d) {
  ComplexMatrix out(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) out.re(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return out;
}

}  // namespace ckcoh
