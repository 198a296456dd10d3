#ifndef CROWSIM_OBSERVABLES_HPP
#define CROWSIM_OBSERVABLES_HPP

#include <utility>
#include <vector>

#include "types.hpp"

namespace crowsim {

// Fast-phase handling for quantities carrying optical-frequency factors.
// instantaneous evaluates formulas at the given t; the envelope modes
// replace the fast phasor by the unit phasor extremising the squeezing:
// envelope_min yields the lower envelope of var_x and of the correlation
// variance (and the matching upper envelope of var_y), envelope_max the
// opposite extreme. Exact because the fast term enters linearly.
enum class EvalMode { instantaneous, envelope_min, envelope_max };

// Time series of per-cavity and pairwise observables. Quadrature convention
// X = a + a+, Y = i(a - a+); vacuum variance is 1. A pair is entangled at
// times where corr_var < 4.
struct ObservableSeries {
  std::vector<double> times;  // raw radian-time, ascending
  std::vector<int> cavities;  // cavity labels, one per column
  std::vector<std::pair<int, int>> pairs;

  Grid photon_number;  // [time x cavity]
  Grid var_x;          // [time x cavity]
  Grid var_y;          // [time x cavity]
  Grid corr_var;       // [time x pair]
};

}  // namespace crowsim

#endif
