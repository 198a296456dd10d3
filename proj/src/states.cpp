#include "states.hpp"

#include <cmath>

#include "errors.hpp"

namespace crowsim {

namespace {

void check_physical(const InitialStateMoments& m) {
  // Gaussian-state positivity: |<aa>|^2 <= n(n+1).
  const double bound = std::sqrt(m.n_avg * (m.n_avg + 1.0));
  if (std::abs(m.anom) > bound + 1e-12)
    throw DomainError("initial state violates Gaussian positivity");
}

}  // namespace

InitialStateMoments svs_moments(double u, double phi, int cavity) {
  if (!std::isfinite(u) || u < 0.0) throw DomainError("svs_moments: u must be >= 0");
  if (!std::isfinite(phi)) throw DomainError("svs_moments: phi must be finite");
  InitialStateMoments m;
  const double sh = std::sinh(u), ch = std::cosh(u);
  m.n_avg = sh * sh;
  m.anom = -Complex(std::cos(phi), std::sin(phi)) * (ch * sh);
  m.anom_conj = std::conj(m.anom);
  m.excited_index = cavity;
  check_physical(m);
  return m;
}

InitialStateMoments sts_moments(double u, double phi, double n_th, int cavity) {
  if (!std::isfinite(u) || u < 0.0) throw DomainError("sts_moments: u must be >= 0");
  if (!std::isfinite(n_th) || n_th < 0.0) throw DomainError("sts_moments: n_th must be >= 0");
  if (!std::isfinite(phi)) throw DomainError("sts_moments: phi must be finite");
  InitialStateMoments m;
  const double sh = std::sinh(u);
  m.n_avg = n_th * std::cosh(2.0 * u) + sh * sh;
  m.anom = -(n_th + 0.5) * Complex(std::cos(phi), std::sin(phi)) * std::sinh(2.0 * u);
  m.anom_conj = std::conj(m.anom);
  m.excited_index = cavity;
  check_physical(m);
  return m;
}

InitialStateMoments coherent_moments(Complex eta, int cavity) {
  if (!std::isfinite(eta.real()) || !std::isfinite(eta.imag()))
    throw DomainError("coherent_moments: eta must be finite");
  InitialStateMoments m;
  m.n_avg = std::norm(eta);
  m.anom = eta * eta;
  m.anom_conj = std::conj(m.anom);
  m.excited_index = cavity;
  check_physical(m);
  return m;
}

}  // namespace crowsim
