#include "modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eig.hpp"
#include "errors.hpp"

namespace crowsim {

namespace {

constexpr double kCondLimit = 1e10;
constexpr double kResidualLimit = 1e-8;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void CavityChainSpec::validate() const {
  if (n_cavities < 1) throw SpecError("CavityChainSpec: n_cavities must be >= 1");
  if (!finite(omega0) || !finite(beta1)) throw SpecError("CavityChainSpec: non-finite parameters");
  if (omega0.imag() > 0.0)
    throw SpecError("CavityChainSpec: Im(omega0) must be <= 0 (decaying quasimode)");
  if (!(period > 0.0)) throw SpecError("CavityChainSpec: period must be positive");
  if (overlap.has_value() != coupling.has_value())
    throw SpecError("CavityChainSpec: overlap and coupling matrices must be given together");
  if (overlap) {
    if (overlap->rows != n_cavities || overlap->cols != n_cavities ||
        coupling->rows != n_cavities || coupling->cols != n_cavities)
      throw DimensionError("CavityChainSpec: matrices must be n_cavities x n_cavities");
    for (int q = 0; q < n_cavities; ++q)
      if (std::abs((*overlap)(q, q) - Complex(1.0, 0.0)) > 1e-9)
        throw SpecError("CavityChainSpec: overlap diagonal must be 1 after normalisation");
  }
  if (!cavity_omegas.empty() && static_cast<int>(cavity_omegas.size()) != n_cavities)
    throw DimensionError("CavityChainSpec: cavity_omegas length mismatch");
}

int QuasimodeBasis::cavity_column(int label) const {
  for (size_t i = 0; i < cavity_labels.size(); ++i)
    if (cavity_labels[i] == label) return static_cast<int>(i);
  throw DimensionError("QuasimodeBasis: cavity label " + std::to_string(label) + " not present");
}

QuasimodeBasis two_cavity_modes(const CavityChainSpec& spec) {
  spec.validate();
  if (spec.n_cavities != 2) throw SpecError("two_cavity_modes: n_cavities must be 2");
  const double r = 1.0 / std::numbers::sqrt2;
  QuasimodeBasis b;
  b.frequencies = {spec.omega0 * (1.0 + 0.5 * spec.beta1), spec.omega0 * (1.0 - 0.5 * spec.beta1)};
  b.coefficients = CMatrix(2, 2);
  b.coefficients(0, 0) = r;
  b.coefficients(0, 1) = r;
  b.coefficients(1, 0) = r;
  b.coefficients(1, 1) = -r;
  b.cavity_labels = {0, 1};
  return b;
}

QuasimodeBasis crow_bloch_modes(const CavityChainSpec& spec) {
  spec.validate();
  const int n = spec.n_cavities;
  if (n < 2) throw SpecError("crow_bloch_modes: need at least 2 cavities");
  QuasimodeBasis b;
  b.frequencies.resize(static_cast<size_t>(n));
  b.coefficients = CMatrix(n, n);
  b.cavity_labels.resize(static_cast<size_t>(n));
  const int offset = (n % 2 == 1) ? (n - 1) / 2 : n / 2;
  for (int q = 0; q < n; ++q) b.cavity_labels[static_cast<size_t>(q)] = q - offset;
  const double r = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    const double kd = 2.0 * std::numbers::pi * j / n;  // k_j D
    b.frequencies[static_cast<size_t>(j)] = spec.omega0 * (1.0 - spec.beta1 * std::cos(kd));
    for (int q = 0; q < n; ++q) {
      const int p = b.cavity_labels[static_cast<size_t>(q)];
      const double phase = kd * p;
      b.coefficients(j, q) = Complex(std::cos(phase), std::sin(phase)) * r;
    }
  }
  return b;
}

ComplexFrequency full_dispersion(const CavityChainSpec& spec, double k) {
  spec.validate();
  const size_t np = std::max(spec.alpha_coeffs.size(), spec.beta_coeffs.size());
  Complex num = 1.0, den = 1.0;
  for (size_t p = 1; p <= np; ++p) {
    const double c = 2.0 * std::cos(k * static_cast<double>(p) * spec.period);
    const Complex ap = p <= spec.alpha_coeffs.size() ? spec.alpha_coeffs[p - 1] : Complex(0.0);
    const Complex bp = p <= spec.beta_coeffs.size() ? spec.beta_coeffs[p - 1] : Complex(0.0);
    num += c * ap;
    den += c * (ap + bp);
  }
  if (std::abs(den) < 1e-12)
    throw DomainError("full_dispersion: dispersion denominator is numerically singular");
  return spec.omega0 * std::sqrt(num / den);
}

QuasimodeBasis solve_generalized_modes(const CavityChainSpec& spec) {
  spec.validate();
  if (!spec.overlap) throw SpecError("solve_generalized_modes: overlap/coupling matrices required");
  const int n = spec.n_cavities;
  const CMatrix& a = *spec.overlap;
  const CMatrix& bm = *spec.coupling;

  CMatrix apb(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) apb(i, j) = a(i, j) + bm(i, j);

  const double cond = eig::condition_1norm(apb);
  if (!(cond < kCondLimit))
    throw SingularMatrixError("solve_generalized_modes: A+B is numerically singular (cond ~ " +
                              std::to_string(cond) + ")");

  // Right-hand side A * Omega with Omega = Diag{Omega_q^2}.
  CMatrix rhs(n, n);
  for (int j = 0; j < n; ++j) {
    const Complex wq = spec.cavity_omegas.empty() ? spec.omega0 : spec.cavity_omegas[static_cast<size_t>(j)];
    const Complex wq2 = wq * wq;
    for (int i = 0; i < n; ++i) rhs(i, j) = a(i, j) * wq2;
  }
  const CMatrix m = eig::lu_solve(apb, rhs);
  const eig::EigenResult es = eig::eigensystem(m);

  std::vector<int> order(static_cast<size_t>(n));
  std::vector<Complex> freqs(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Complex w = std::sqrt(es.values[static_cast<size_t>(j)]);
    if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() > 0.0)) w = -w;
    freqs[static_cast<size_t>(j)] = w;
    order[static_cast<size_t>(j)] = j;
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const Complex& fx = freqs[static_cast<size_t>(x)];
    const Complex& fy = freqs[static_cast<size_t>(y)];
    if (fx.real() != fy.real()) return fx.real() < fy.real();
    return fx.imag() < fy.imag();
  });

  QuasimodeBasis out;
  out.frequencies.resize(static_cast<size_t>(n));
  out.coefficients = CMatrix(n, n);
  out.cavity_labels.resize(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) out.cavity_labels[static_cast<size_t>(q)] = q;

  for (int row = 0; row < n; ++row) {
    const int j = order[static_cast<size_t>(row)];
    out.frequencies[static_cast<size_t>(row)] = freqs[static_cast<size_t>(j)];
    // Phase convention: largest-magnitude component real positive.
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double m2 = std::abs(es.vectors(i, j));
      if (m2 > best) {
        best = m2;
        imax = i;
      }
    }
    const Complex piv = es.vectors(imax, j);
    const Complex rot = std::abs(piv) > 0.0 ? std::conj(piv) / std::abs(piv) : Complex(1.0, 0.0);
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) norm2 += std::norm(es.vectors(i, j));
    const double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < n; ++i) out.coefficients(row, i) = es.vectors(i, j) * rot * inv;
  }

  for (int mde = 0; mde < n; ++mde) {
    const double res = generalized_residual(spec, out, mde);
    if (!(res <= kResidualLimit))
      throw ConvergenceError("solve_generalized_modes: mode residual " + std::to_string(res) +
                             " exceeds " + std::to_string(kResidualLimit));
  }
  return out;
}

double generalized_residual(const CavityChainSpec& spec, const QuasimodeBasis& basis, int mode) {
  if (!spec.overlap) throw SpecError("generalized_residual: matrices required");
  const int n = spec.n_cavities;
  if (mode < 0 || mode >= basis.n_modes() || basis.n_cavities() != n)
    throw DimensionError("generalized_residual: mode/basis shape mismatch");
  const CMatrix& a = *spec.overlap;
  const CMatrix& bm = *spec.coupling;
  const Complex w2 = basis.frequencies[static_cast<size_t>(mode)] *
                     basis.frequencies[static_cast<size_t>(mode)];
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    Complex acc = 0.0;
    for (int q = 0; q < n; ++q) {
      const Complex wq = spec.cavity_omegas.empty() ? spec.omega0 : spec.cavity_omegas[static_cast<size_t>(q)];
      const Complex v = basis.coefficients(mode, q);
      acc += a(i, q) * (wq * wq) * v - w2 * (a(i, q) + bm(i, q)) * v;
    }
    s += std::norm(acc);
  }
  return std::sqrt(s);
}

}  // namespace crowsim
