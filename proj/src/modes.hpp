#ifndef CROWSIM_MODES_HPP
#define CROWSIM_MODES_HPP

#include <optional>
#include <vector>

#include "types.hpp"

namespace crowsim {

// Description of a coupled-cavity chain. Coupling enters either through the
// nearest-neighbour parameter beta1, through cosine-series coefficient lists
// (for the full dispersion), or through explicit overlap/coupling matrices
// (for the generalized eigenproblem).
struct CavityChainSpec {
  int n_cavities = 0;
  ComplexFrequency omega0;         // single-cavity complex frequency, Im <= 0
  Complex beta1;                   // nearest-neighbour coupling coefficient
  double period = 1.0;             // lattice period D
  std::vector<Complex> alpha_coeffs;  // overlap cosine coefficients, p = 1..P
  std::vector<Complex> beta_coeffs;   // coupling cosine coefficients, p = 1..P
  std::optional<CMatrix> overlap;     // A, diagonal 1 after normalisation
  std::optional<CMatrix> coupling;    // B
  std::vector<ComplexFrequency> cavity_omegas;  // per-cavity frequencies; empty = all omega0

  void validate() const;
};

struct QuasimodeBasis {
  std::vector<ComplexFrequency> frequencies;  // one per mode
  CMatrix coefficients;                       // row = mode, column = cavity
  std::vector<int> cavity_labels;             // label for each column

  int n_modes() const { return static_cast<int>(frequencies.size()); }
  int n_cavities() const { return coefficients.cols; }
  // Column index for a cavity label; throws DimensionError when absent.
  int cavity_column(int label) const;
};

// The two nearest-neighbour-coupled cavities: frequencies omega0*(1 +- beta1/2)
// paired with the symmetric (1,1)/sqrt(2) and antisymmetric (1,-1)/sqrt(2) rows.
// Cavity labels are 0 (left) and 1 (right).
QuasimodeBasis two_cavity_modes(const CavityChainSpec& spec);

// Periodic ring of N identical cavities under nearest-neighbour coupling:
// Bloch modes at k_j = 2 pi j / (N D) with frequencies
// omega0*(1 - beta1 cos(k_j D)) and coefficients e^{i k_j p D}/sqrt(N).
// Cavity labels are centred, -(N-1)/2 .. (N-1)/2 for odd N.
QuasimodeBasis crow_bloch_modes(const CavityChainSpec& spec);

// Tight-binding dispersion with the full cosine series,
//   omega(k) = omega0 sqrt[(1 + 2 sum_p alpha_p cos(k p D)) /
//                          (1 + 2 sum_p (alpha_p + beta_p) cos(k p D))],
// principal square-root branch.
ComplexFrequency full_dispersion(const CavityChainSpec& spec, double k);

// Generalized eigenproblem A Omega v = w^2 (A+B) v reduced to the standard
// problem M v = w^2 v with M = (A+B)^{-1} A Omega, Omega = Diag{Omega_q^2}.
// Frequencies are the principal square roots with Re > 0, modes sorted by
// ascending Re, rows unit-norm with the largest component made real positive.
QuasimodeBasis solve_generalized_modes(const CavityChainSpec& spec);

// Residual ||A Omega v - w^2 (A+B) v||_2 of one returned mode against the
// generalized equation; exposed for validation.
double generalized_residual(const CavityChainSpec& spec, const QuasimodeBasis& basis, int mode);

}  // namespace crowsim

#endif
