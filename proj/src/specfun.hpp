#ifndef CROWSIM_SPECFUN_HPP
#define CROWSIM_SPECFUN_HPP

#include <vector>

#include "types.hpp"

namespace crowsim::specfun {

// Supported argument/order window. Exceeding it is an error, not an
// approximation; callers that need more are outside the design envelope.
inline constexpr double kMaxAbsArg = 1.0e4;
inline constexpr int kMaxOrder = 512;
inline constexpr double kMaxI0Arg = 1.0e3;

// Bessel function of the first kind J_n(z) for integer order n >= 0 and
// complex argument. Ascending series for |z| <= 20, backward (Miller)
// recurrence above, normalised against the unity sum near the real axis
// and against e^{-+iz} away from it. J_{-n} follows from parity,
// (-1)^n J_n, and is left to the caller.
Complex bessel_j(int n, Complex z);

// All orders 0..nmax at one argument; one backward pass for large |z|.
std::vector<Complex> bessel_j_orders(int nmax, Complex z);

// Modified Bessel function I_0(x), x in [0, kMaxI0Arg].
double bessel_i0(double x);

// The constant 2^{1/3} Ai(-2^{1/3} c0) with c0 = 0.8, entering the
// asymptotic first-maximum amplitude of J_p at large order.
// Frozen value; verified against mpmath (airyai, 40 digits).
double airy_constant_c1();

}  // namespace crowsim::specfun

#endif
