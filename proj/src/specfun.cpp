#include "specfun.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace crowsim::specfun {

namespace {

using CLong = std::complex<long double>;

constexpr int kSeriesMaxTerms = 800;
constexpr double kSeriesMillerSplit = 20.0;

void check_args(int n, Complex z) {
  if (n < 0 || n > kMaxOrder)
    throw DomainError("bessel_j: order " + std::to_string(n) + " outside [0, " +
                      std::to_string(kMaxOrder) + "]");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("bessel_j: non-finite argument");
  if (std::abs(z) > kMaxAbsArg)
    throw DomainError("bessel_j: |z| exceeds supported range " + std::to_string(kMaxAbsArg));
}

// Ascending power series in extended precision. The alternating terms peak
// near k ~ |z|/2, so the summation loses ~|z| log10(e)/2 digits to
// cancellation; with a 64-bit mantissa that still leaves < 1e-12 relative
// error at the |z| = 20 switch point.
CLong series_j(int n, CLong zh) {
  // zh = z/2
  CLong term = 1.0L;
  for (int k = 1; k <= n; ++k) term *= zh / static_cast<long double>(k);
  CLong zh2 = zh * zh;
  CLong sum = term;
  long double peak = std::abs(term);
  bool decaying = false;
  long double prev = peak;
  for (int k = 1; k <= kSeriesMaxTerms; ++k) {
    term *= -zh2 / static_cast<long double>(static_cast<long long>(k) * (n + k));
    sum += term;
    long double mag = std::abs(term);
    if (mag > peak) peak = mag;
    if (mag < prev) decaying = true;
    prev = mag;
    if (decaying && mag <= 1e-22L * (std::abs(sum) + peak * 1e-18L) + 1e-4920L) break;
  }
  return sum;
}

// Backward recurrence from an order where J is negligible, normalised with
// J_0 + 2 sum_k J_{2k} = 1 (holds for complex argument). Fills orders
// 0..nmax. Rescales on the way down to avoid overflow.
std::vector<Complex> miller_j(int nmax, Complex z) {
  const double az = std::abs(z);
  // Tail orders beyond |z| + s|z|^{1/3} decay like Ai(2^{1/3} s); s ~ 14
  // puts the starting value below 1e-19 of the largest order.
  int start = static_cast<int>(std::ceil(std::max(static_cast<double>(nmax), az) +
                                         14.0 * std::cbrt(az + 1.0))) +
              20;
  if (start % 2 == 1) ++start;

  // Near the real axis normalise with J_0 + 2 sum J_{2k} = 1. Off the axis
  // that sum cancels catastrophically (terms ~ e^{|Im z|} adding up to 1);
  // use e^{-iz} = J_0 + 2 sum (-i)^k J_k for Im z > 0, whose terms are
  // phase-aligned, or the mirrored form for Im z < 0.
  const int axis = (z.imag() > 8.0) ? 1 : (z.imag() < -8.0 ? -1 : 0);
  const CLong iw = (axis > 0) ? CLong(0.0L, -1.0L) : CLong(0.0L, 1.0L);

  std::vector<CLong> j(static_cast<size_t>(nmax) + 1);
  const CLong zi = CLong(1.0L, 0.0L) / CLong(z);
  CLong fp1 = 0.0L;   // f_{m+1}
  CLong f = 1e-300L;  // f_m at m = start
  CLong norm = 0.0L;
  const long double big = 1e280L;

  for (int m = start; m >= 0; --m) {
    if (m <= nmax) j[static_cast<size_t>(m)] = f;
    if (axis == 0) {
      if (m > 0 && m % 2 == 0) norm += 2.0L * f;
      if (m == 0) norm += f;
    } else {
      CLong w;
      switch (m & 3) {
        case 0: w = CLong(1.0L, 0.0L); break;
        case 1: w = iw; break;
        case 2: w = CLong(-1.0L, 0.0L); break;
        default: w = -iw; break;
      }
      norm += (m == 0 ? w : 2.0L * w) * f;
    }
    if (m > 0) {
      CLong fm1 = 2.0L * static_cast<long double>(m) * zi * f - fp1;
      fp1 = f;
      f = fm1;
      long double mag = std::abs(f);
      if (mag > big) {
        const long double scale = 1e-280L;
        f *= scale;
        fp1 *= scale;
        norm *= scale;
        for (int q = m; q <= nmax; ++q) j[static_cast<size_t>(q)] *= scale;
      }
    }
  }

  CLong target(1.0L, 0.0L);
  if (axis != 0)
    target = std::exp(iw * CLong(z));  // e^{-iz} or e^{+iz}; in long double range

  std::vector<Complex> out(static_cast<size_t>(nmax) + 1);
  for (int m = 0; m <= nmax; ++m) {
    const CLong v = j[static_cast<size_t>(m)] * (target / norm);
    out[static_cast<size_t>(m)] =
        Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    if (!std::isfinite(out[static_cast<size_t>(m)].real()) ||
        !std::isfinite(out[static_cast<size_t>(m)].imag()))
      throw DomainError("bessel_j: result overflows double precision");
  }
  return out;
}

Complex to_double_checked(CLong v, const char* what) {
  const Complex out(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
    throw DomainError(std::string(what) + ": result overflows double precision");
  return out;
}

}  // namespace

Complex bessel_j(int n, Complex z) {
  check_args(n, z);
  if (z == Complex(0.0, 0.0)) return n == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
  if (std::abs(z) <= kSeriesMillerSplit)
    return to_double_checked(series_j(n, CLong(z) / 2.0L), "bessel_j");
  return miller_j(n, z)[static_cast<size_t>(n)];
}

std::vector<Complex> bessel_j_orders(int nmax, Complex z) {
  check_args(nmax, z);
  if (z == Complex(0.0, 0.0)) {
    std::vector<Complex> out(static_cast<size_t>(nmax) + 1, Complex(0.0, 0.0));
    out[0] = 1.0;
    return out;
  }
  if (std::abs(z) <= kSeriesMillerSplit) {
    std::vector<Complex> out(static_cast<size_t>(nmax) + 1);
    const CLong zh = CLong(z) / 2.0L;
    for (int n = 0; n <= nmax; ++n)
      out[static_cast<size_t>(n)] = to_double_checked(series_j(n, zh), "bessel_j");
    return out;
  }
  return miller_j(nmax, z);
}

double bessel_i0(double x) {
  if (!std::isfinite(x) || x < 0.0)
    throw DomainError("bessel_i0: argument must be finite and >= 0");
  if (x > kMaxI0Arg)
    throw DomainError("bessel_i0: argument exceeds supported range " + std::to_string(kMaxI0Arg));
  const long double xh2 = static_cast<long double>(x) * static_cast<long double>(x) / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k <= kSeriesMaxTerms; ++k) {
    term *= xh2 / (static_cast<long double>(k) * static_cast<long double>(k));
    sum += term;
    if (term <= 1e-22L * sum) break;
  }
  const double out = static_cast<double>(sum);
  if (!std::isfinite(out)) throw DomainError("bessel_i0: result overflows double precision");
  return out;
}

double airy_constant_c1() {
  return 0.67484472386707383;
}

}  // namespace crowsim::specfun
