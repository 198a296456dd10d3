#ifndef CROWSIM_STATES_HPP
#define CROWSIM_STATES_HPP

#include "types.hpp"

namespace crowsim {

// Second moments of the initially excited cavity; every observable this
// library computes depends on the state only through this triple.
struct InitialStateMoments {
  double n_avg = 0.0;       // <a+ a>
  Complex anom;             // <a a>
  Complex anom_conj;        // <a+ a+> = conj(anom)
  int excited_index = 0;    // cavity label carrying the excitation
};

// Squeezed vacuum: n = sinh^2 u, <aa> = -e^{i phi} cosh u sinh u.
InitialStateMoments svs_moments(double u, double phi, int cavity);

// Squeezed thermal: n = n_th cosh 2u + sinh^2 u,
// <aa> = -(n_th + 1/2) e^{i phi} sinh 2u.
InitialStateMoments sts_moments(double u, double phi, double n_th, int cavity);

// Coherent: n = |eta|^2, <aa> = eta^2.
InitialStateMoments coherent_moments(Complex eta, int cavity);

}  // namespace crowsim

#endif
