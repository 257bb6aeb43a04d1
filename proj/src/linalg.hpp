#pragma once

#include <vector>

#include "rational.hpp"

namespace dmm {

// dense matrix with exact rational entries
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : r_(rows), c_(cols), a_((size_t)rows * (size_t)cols, Rat(0)) {
    if (rows < 0 || cols < 0) throw error(errc::argument, "negative matrix size");
  }
  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& operator()(int i, int j) { return a_[(size_t)i * (size_t)c_ + (size_t)j]; }
  const Rat& operator()(int i, int j) const { return a_[(size_t)i * (size_t)c_ + (size_t)j]; }

  RatMat operator*(const RatMat& o) const {
    if (c_ != o.r_) throw error(errc::argument, "matrix shape mismatch");
    RatMat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const Rat& x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.c_; ++j) out(i, j) += x * o(k, j);
      }
    return out;
  }
  RatMat operator+(const RatMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw error(errc::argument, "matrix shape mismatch");
    RatMat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
  }
  RatMat scaled(const Rat& s) const {
    RatMat out = *this;
    for (auto& x : out.a_) x *= s;
    return out;
  }

  Rat trace() const {
    if (r_ != c_) throw error(errc::argument, "trace needs a square matrix");
    Rat t(0);
    for (int i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
  }

  RatMat pow(int k) const {
    if (r_ != c_) throw error(errc::argument, "power needs a square matrix");
    if (k < 0) throw error(errc::argument, "negative matrix power");
    RatMat out = identity(r_);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  Rat det() const {
    if (r_ != c_) throw error(errc::argument, "determinant needs a square matrix");
    RatMat m = *this;
    Rat d(1);
    for (int col = 0; col < c_; ++col) {
      int piv = -1;
      for (int i = col; i < r_; ++i)
        if (m(i, col) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Rat(0);
      if (piv != col) {
        for (int j = 0; j < c_; ++j) std::swap(m(piv, j), m(col, j));
        d = -d;
      }
      d *= m(col, col);
      Rat inv = Rat(1) / m(col, col);
      for (int i = col + 1; i < r_; ++i) {
        if (m(i, col) == 0) continue;
        Rat f = m(i, col) * inv;
        for (int j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
      }
    }
    return d;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

}  // namespace dmm
