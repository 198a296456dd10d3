#ifndef CROWSIM_EIG_HPP
#define CROWSIM_EIG_HPP

#include <vector>

#include "types.hpp"

namespace crowsim::eig {

struct EigenResult {
  std::vector<Complex> values;
  CMatrix vectors;  // column j is a unit-norm eigenvector for values[j]
};

// Dense complex non-symmetric eigensolver: Householder reduction to upper
// Hessenberg form, shifted QR iteration (Wilkinson shift, explicit Givens
// sweeps) to Schur form, then triangular back-substitution for the
// eigenvectors. Sized for the small (<~200) matrices this library sees;
// no balancing pass.
EigenResult eigensystem(const CMatrix& m);

// Solve A X = B by partial-pivot LU.
CMatrix lu_solve(const CMatrix& a, const CMatrix& b);

// 1-norm condition estimate ||A||_1 ||A^-1||_1 via the explicit inverse;
// +inf when the factorisation breaks down.
double condition_1norm(const CMatrix& a);

}  // namespace crowsim::eig

#endif
