#ifndef CROWSIM_EVOLVE_GENERAL_HPP
#define CROWSIM_EVOLVE_GENERAL_HPP

#include "modes.hpp"
#include "observables.hpp"
#include "states.hpp"

namespace crowsim {

// Mode-sum evolution engine. With a single excited cavity c every observable
// reduces to the propagator amplitude
//   F_p(t) = sum_m v_{mp} conj(v_{mc}) e^{-i w_m t},
// so the quadruple mode sums collapse to O(modes) work per cavity and time:
//   <n_p>        = n_avg |F_p|^2
//   <(dX_p)^2>   = 1 + 2 n_avg |F_p|^2 + 2 Re(<aa> F_p^2)
//   <(dY_p)^2>   = 1 + 2 n_avg |F_p|^2 - 2 Re(<aa> F_p^2)
//   D^2_{p,p'}   = 4 + 4 n_avg (|F_p|^2 + |F_p'|^2) - 8 Re(<aa> F_p F_p')
namespace evolve_general {

// All observables in one pass. cavities/pairs use basis cavity labels;
// an empty cavity list selects every cavity in the basis.
ObservableSeries evaluate(const QuasimodeBasis& basis, const InitialStateMoments& state,
                          const std::vector<double>& times, const std::vector<int>& cavities,
                          const std::vector<std::pair<int, int>>& pairs);

ObservableSeries photon_number_series(const QuasimodeBasis& basis, const InitialStateMoments& state,
                                      const std::vector<double>& times);

ObservableSeries quadrature_series(const QuasimodeBasis& basis, const InitialStateMoments& state,
                                   const std::vector<double>& times);

ObservableSeries correlation_series(const QuasimodeBasis& basis, const InitialStateMoments& state,
                                    const std::vector<double>& times,
                                    const std::vector<std::pair<int, int>>& pairs);

}  // namespace evolve_general

}  // namespace crowsim

#endif
