#ifndef CROWSIM_TYPES_HPP
#define CROWSIM_TYPES_HPP

#include <complex>
#include <vector>

namespace crowsim {

using Complex = std::complex<double>;

// Complex quasimode frequency, written throughout as w - i*g with g >= 0.
using ComplexFrequency = Complex;

// Dense complex matrix, row-major.
struct CMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> a;

  CMatrix() = default;
  CMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Complex& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Complex& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

// Real [row x col] table used for time-series output (rows = time points).
struct Grid {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  Grid() = default;
  Grid(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c) {}

  double& at(int i, int j) { return v[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return v[static_cast<size_t>(i) * cols + j]; }
  bool empty() const { return rows == 0 || cols == 0; }
};

}  // namespace crowsim

#endif
