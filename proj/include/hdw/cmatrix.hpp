#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace hdw {

using cplx = std::complex<double>;

// Dense complex matrix with fixed 4x4 capacity, sized 2 or 4 at runtime.
// Small enough to live on the stack inside per-mode hot loops.
class CMat {
public:
  CMat() = default;
  explicit CMat(int dim) : dim_(check_dim(dim)) { a_.fill(cplx{0.0, 0.0}); }

  static CMat identity(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }
  static CMat zero(int dim) { return CMat(dim); }

  int dim() const { return dim_; }

  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * 4 + j]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * 4 + j]; }

  CMat& operator+=(const CMat& o) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) (*this)(i, j) += o(i, j);
    return *this;
  }
  CMat& operator-=(const CMat& o) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) (*this)(i, j) -= o(i, j);
    return *this;
  }
  CMat& operator*=(cplx s) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) (*this)(i, j) *= s;
    return *this;
  }

  friend CMat operator+(CMat a, const CMat& b) { return a += b; }
  friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
  friend CMat operator*(cplx s, CMat a) { return a *= s; }
  friend CMat operator*(CMat a, cplx s) { return a *= s; }

  friend CMat operator*(const CMat& a, const CMat& b) {
    CMat c(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{0.0, 0.0}) continue;
        for (int j = 0; j < a.dim_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  CMat adjoint() const {
    CMat c(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) c(i, j) = std::conj((*this)(j, i));
    return c;
  }

  // Largest entry magnitude.
  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) m = std::max(m, std::abs((*this)(i, j)));
    return m;
  }

  std::array<cplx, 4> apply(const std::array<cplx, 4>& v) const {
    std::array<cplx, 4> r{};
    for (int i = 0; i < dim_; ++i) {
      cplx acc{0.0, 0.0};
      for (int j = 0; j < dim_; ++j) acc += (*this)(i, j) * v[j];
      r[i] = acc;
    }
    return r;
  }

private:
  static int check_dim(int dim) {
    if (dim != 2 && dim != 4) throw std::invalid_argument("CMat: dimension must be 2 or 4");
    return dim;
  }

  int dim_ = 2;
  std::array<cplx, 16> a_{};
};

}  // namespace hdw
