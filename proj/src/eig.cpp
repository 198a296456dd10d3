#include "eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace crowsim::eig {

namespace {

constexpr double kEps = 2.220446049250313e-16;
constexpr int kMaxSweepsPerEigenvalue = 40;

// Plane rotation with real cosine:
//   [ c        s ] [f]   [r]
//   [-conj(s)  c ] [g] = [0]
void make_givens(Complex f, Complex g, double& c, Complex& s) {
  const double af = std::abs(f);
  const double ag = std::abs(g);
  if (ag == 0.0) {
    c = 1.0;
    s = 0.0;
    return;
  }
  if (af == 0.0) {
    c = 0.0;
    s = std::conj(g) / ag;
    return;
  }
  const double d = std::hypot(af, ag);
  c = af / d;
  s = (f / af) * (std::conj(g) / d);
}

// In-place reduction to upper Hessenberg form, unitary Q accumulated.
void hessenberg(CMatrix& h, CMatrix& q) {
  const int n = h.rows;
  q = CMatrix::identity(n);
  std::vector<Complex> u(static_cast<size_t>(n));
  for (int k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) xnorm2 += std::norm(h(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;

    const Complex x0 = h(k + 1, k);
    const double ax0 = std::abs(x0);
    const Complex alpha = (ax0 == 0.0) ? Complex(-xnorm, 0.0) : -(x0 / ax0) * xnorm;

    double unorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) u[static_cast<size_t>(i)] = h(i, k);
    u[static_cast<size_t>(k + 1)] -= alpha;
    for (int i = k + 1; i < n; ++i) unorm2 += std::norm(u[static_cast<size_t>(i)]);
    if (unorm2 == 0.0) continue;
    const double beta = 2.0 / unorm2;

    // H <- P H with P = I - beta u u^H acting on rows k+1..n-1
    for (int j = k; j < n; ++j) {
      Complex w = 0.0;
      for (int i = k + 1; i < n; ++i) w += std::conj(u[static_cast<size_t>(i)]) * h(i, j);
      w *= beta;
      for (int i = k + 1; i < n; ++i) h(i, j) -= u[static_cast<size_t>(i)] * w;
    }
    // H <- H P on columns k+1..n-1
    for (int i = 0; i < n; ++i) {
      Complex w = 0.0;
      for (int j = k + 1; j < n; ++j) w += h(i, j) * u[static_cast<size_t>(j)];
      w *= beta;
      for (int j = k + 1; j < n; ++j) h(i, j) -= w * std::conj(u[static_cast<size_t>(j)]);
    }
    // Q <- Q P
    for (int i = 0; i < n; ++i) {
      Complex w = 0.0;
      for (int j = k + 1; j < n; ++j) w += q(i, j) * u[static_cast<size_t>(j)];
      w *= beta;
      for (int j = k + 1; j < n; ++j) q(i, j) -= w * std::conj(u[static_cast<size_t>(j)]);
    }
    h(k + 1, k) = alpha;
    for (int i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

double upper_norm(const CMatrix& t) {
  double m = 0.0;
  for (int i = 0; i < t.rows; ++i)
    for (int j = std::max(0, i - 1); j < t.cols; ++j) m = std::max(m, std::abs(t(i, j)));
  return m;
}

// Shifted QR on the Hessenberg matrix; on return t is upper triangular
// (Schur form) and z holds the accumulated unitary, a = z t z^H.
void schur_qr(CMatrix& t, CMatrix& z) {
  const int n = t.rows;
  const double anorm = std::max(upper_norm(t), std::numeric_limits<double>::min());
  std::vector<double> cs(static_cast<size_t>(std::max(0, n - 1)));
  std::vector<Complex> sn(static_cast<size_t>(std::max(0, n - 1)));

  int hi = n - 1;
  int sweeps = 0;
  while (hi >= 0) {
    int lo = hi;
    while (lo > 0) {
      double tst = std::abs(t(lo - 1, lo - 1)) + std::abs(t(lo, lo));
      if (tst == 0.0) tst = anorm;
      if (std::abs(t(lo, lo - 1)) <= std::max(kEps * tst, 1e-300)) {
        t(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      sweeps = 0;
      continue;
    }
    if (++sweeps > kMaxSweepsPerEigenvalue)
      throw ConvergenceError("eigensystem: QR iteration failed to converge");

    Complex sigma;
    if (sweeps % 10 == 0) {
      // Exceptional shift to break symmetric stalls.
      sigma = t(hi, hi) + 0.75 * std::abs(t(hi, hi - 1));
    } else {
      // Wilkinson: trailing 2x2 eigenvalue closest to t(hi,hi).
      const Complex a = t(hi - 1, hi - 1), b = t(hi - 1, hi);
      const Complex c = t(hi, hi - 1), d = t(hi, hi);
      const Complex half = 0.5 * (a + d);
      const Complex disc = std::sqrt(half * half - (a * d - b * c));
      const Complex l1 = half + disc, l2 = half - disc;
      sigma = (std::abs(l1 - d) <= std::abs(l2 - d)) ? l1 : l2;
    }

    for (int i = lo; i <= hi; ++i) t(i, i) -= sigma;
    for (int i = lo; i < hi; ++i) {
      double c_;
      Complex s_;
      make_givens(t(i, i), t(i + 1, i), c_, s_);
      cs[static_cast<size_t>(i)] = c_;
      sn[static_cast<size_t>(i)] = s_;
      for (int j = i; j < n; ++j) {
        const Complex t1 = t(i, j), t2 = t(i + 1, j);
        t(i, j) = c_ * t1 + s_ * t2;
        t(i + 1, j) = -std::conj(s_) * t1 + c_ * t2;
      }
      t(i + 1, i) = 0.0;
    }
    for (int i = lo; i < hi; ++i) {
      const double c_ = cs[static_cast<size_t>(i)];
      const Complex s_ = sn[static_cast<size_t>(i)];
      const int rmax = i + 1;
      for (int r = 0; r <= rmax; ++r) {
        const Complex t1 = t(r, i), t2 = t(r, i + 1);
        t(r, i) = c_ * t1 + std::conj(s_) * t2;
        t(r, i + 1) = -s_ * t1 + c_ * t2;
      }
      for (int r = 0; r < n; ++r) {
        const Complex z1 = z(r, i), z2 = z(r, i + 1);
        z(r, i) = c_ * z1 + std::conj(s_) * z2;
        z(r, i + 1) = -s_ * z1 + c_ * z2;
      }
    }
    for (int i = lo; i <= hi; ++i) t(i, i) += sigma;
  }
}

// Eigenvectors of the triangular t, rotated back through z.
CMatrix tri_eigenvectors(const CMatrix& t, const CMatrix& z) {
  const int n = t.rows;
  CMatrix v(n, n);
  double tnorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) tnorm = std::max(tnorm, std::abs(t(i, j)));
  const double smin = std::max(kEps * tnorm, 1e-300);

  std::vector<Complex> y(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Complex lam = t(j, j);
    std::fill(y.begin(), y.end(), Complex(0.0, 0.0));
    y[static_cast<size_t>(j)] = 1.0;
    for (int i = j - 1; i >= 0; --i) {
      Complex acc = 0.0;
      for (int k = i + 1; k <= j; ++k) acc += t(i, k) * y[static_cast<size_t>(k)];
      Complex d = t(i, i) - lam;
      if (std::abs(d) < smin) d = smin;
      y[static_cast<size_t>(i)] = -acc / d;
      const double ay = std::abs(y[static_cast<size_t>(i)]);
      if (ay > 1e100) {
        const double inv = 1.0 / ay;
        for (int k = i; k <= j; ++k) y[static_cast<size_t>(k)] *= inv;
      }
    }
    double norm2 = 0.0;
    for (int r = 0; r < n; ++r) {
      Complex acc = 0.0;
      for (int k = 0; k <= j; ++k) acc += z(r, k) * y[static_cast<size_t>(k)];
      v(r, j) = acc;
      norm2 += std::norm(acc);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (int r = 0; r < n; ++r) v(r, j) *= inv;
  }
  return v;
}

struct LuFactors {
  CMatrix lu;
  std::vector<int> piv;
};

LuFactors lu_factor(CMatrix a) {
  const int n = a.rows;
  LuFactors f;
  f.piv.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double cand = std::abs(a(i, k));
      if (cand > best) {
        best = cand;
        p = i;
      }
    }
    f.piv[static_cast<size_t>(k)] = p;
    if (best < 1e-300)
      throw SingularMatrixError("lu_factor: zero pivot at column " + std::to_string(k));
    if (p != k)
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
    const Complex inv = 1.0 / a(k, k);
    for (int i = k + 1; i < n; ++i) {
      const Complex m = a(i, k) * inv;
      a(i, k) = m;
      for (int j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
    }
  }
  f.lu = std::move(a);
  return f;
}

CMatrix lu_apply(const LuFactors& f, CMatrix b) {
  const int n = f.lu.rows;
  for (int k = 0; k < n; ++k) {
    const int p = f.piv[static_cast<size_t>(k)];
    if (p != k)
      for (int j = 0; j < b.cols; ++j) std::swap(b(k, j), b(p, j));
  }
  for (int j = 0; j < b.cols; ++j) {
    for (int i = 1; i < n; ++i) {
      Complex acc = b(i, j);
      for (int k = 0; k < i; ++k) acc -= f.lu(i, k) * b(k, j);
      b(i, j) = acc;
    }
    for (int i = n - 1; i >= 0; --i) {
      Complex acc = b(i, j);
      for (int k = i + 1; k < n; ++k) acc -= f.lu(i, k) * b(k, j);
      b(i, j) = acc / f.lu(i, i);
    }
  }
  return b;
}

double norm_1(const CMatrix& a) {
  double best = 0.0;
  for (int j = 0; j < a.cols; ++j) {
    double s = 0.0;
    for (int i = 0; i < a.rows; ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

EigenResult eigensystem(const CMatrix& m) {
  if (m.rows != m.cols) throw DimensionError("eigensystem: matrix must be square");
  const int n = m.rows;
  EigenResult res;
  if (n == 0) return res;
  CMatrix t = m;
  CMatrix q;
  hessenberg(t, q);
  schur_qr(t, q);
  res.values.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) res.values[static_cast<size_t>(j)] = t(j, j);
  res.vectors = tri_eigenvectors(t, q);
  return res;
}

CMatrix lu_solve(const CMatrix& a, const CMatrix& b) {
  if (a.rows != a.cols || a.rows != b.rows)
    throw DimensionError("lu_solve: incompatible shapes");
  return lu_apply(lu_factor(a), b);
}

double condition_1norm(const CMatrix& a) {
  if (a.rows != a.cols) throw DimensionError("condition_1norm: matrix must be square");
  try {
    const CMatrix inv = lu_solve(a, CMatrix::identity(a.rows));
    return norm_1(a) * norm_1(inv);
  } catch (const SingularMatrixError&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace crowsim::eig
