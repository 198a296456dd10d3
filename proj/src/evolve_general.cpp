#include "evolve_general.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace crowsim::evolve_general {

namespace {

constexpr double kImagAbort = 1e-8;     // imaginary residue that signals a broken basis
constexpr double kNegativeFloor = -1e-10;  // tolerated photon-number rounding residue

void check_times(const std::vector<double>& times) {
  double prev = -1.0;
  for (double t : times) {
    if (!std::isfinite(t) || t < 0.0) throw DomainError("times must be finite and >= 0");
    if (t < prev) throw DomainError("times must be ascending");
    prev = t;
  }
}

// Real part of an expression that is real for any consistent basis/state;
// a large imaginary residue means the inputs are inconsistent.
double take_real(Complex value, const char* what) {
  if (std::abs(value.imag()) > kImagAbort * std::max(1.0, std::abs(value.real())))
    throw NonRealError(std::string(what) + ": imaginary residue " +
                       std::to_string(value.imag()) + " signals a broken basis or state");
  return value.real();
}

}  // namespace

ObservableSeries evaluate(const QuasimodeBasis& basis, const InitialStateMoments& state,
                          const std::vector<double>& times, const std::vector<int>& cavities,
                          const std::vector<std::pair<int, int>>& pairs) {
  const int n_modes = basis.n_modes();
  const int n_cav = basis.n_cavities();
  if (n_modes == 0 || n_cav == 0) throw DimensionError("evaluate: empty basis");
  if (basis.coefficients.rows != n_modes || basis.coefficients.cols != n_cav)
    throw DimensionError("evaluate: coefficient matrix shape mismatch");
  check_times(times);

  ObservableSeries out;
  out.times = times;
  out.cavities = cavities.empty() ? basis.cavity_labels : cavities;
  out.pairs = pairs;

  // Slots: requested cavities plus any pair members not already present.
  std::vector<int> slot_labels = out.cavities;
  auto slot_of = [&slot_labels](int label) {
    for (size_t i = 0; i < slot_labels.size(); ++i)
      if (slot_labels[i] == static_cast<int>(label)) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::pair<int, int>> pair_slots;
  pair_slots.reserve(pairs.size());
  for (const auto& [p, pp] : pairs) {
    if (p == pp) throw PairError("correlation pair must involve two distinct cavities");
    for (int label : {p, pp})
      if (slot_of(label) < 0) slot_labels.push_back(label);
    pair_slots.emplace_back(slot_of(p), slot_of(pp));
  }

  const int c_col = basis.cavity_column(state.excited_index);
  const int n_slots = static_cast<int>(slot_labels.size());
  const int n_report = static_cast<int>(out.cavities.size());
  const int n_times = static_cast<int>(times.size());

  // Per-mode weights w_m = v_{mp} conj(v_{mc}) for each slot.
  CMatrix weights(n_slots, n_modes);
  for (int s = 0; s < n_slots; ++s) {
    const int col = basis.cavity_column(slot_labels[static_cast<size_t>(s)]);
    for (int m = 0; m < n_modes; ++m)
      weights(s, m) = basis.coefficients(m, col) * std::conj(basis.coefficients(m, c_col));
  }

  out.photon_number = Grid(n_times, n_report);
  out.var_x = Grid(n_times, n_report);
  out.var_y = Grid(n_times, n_report);
  out.corr_var = Grid(n_times, static_cast<int>(pairs.size()));

  std::vector<Complex> phase(static_cast<size_t>(n_modes));
  std::vector<Complex> f(static_cast<size_t>(n_slots));
  for (int it = 0; it < n_times; ++it) {
    const double t = times[static_cast<size_t>(it)];
    for (int m = 0; m < n_modes; ++m) {
      const Complex w = basis.frequencies[static_cast<size_t>(m)];
      // e^{-i w t} with w = wr - i g: magnitude e^{-g t}.
      const double damp = std::exp(w.imag() * t);
      const double ph = -w.real() * t;
      phase[static_cast<size_t>(m)] = Complex(damp * std::cos(ph), damp * std::sin(ph));
    }
    for (int s = 0; s < n_slots; ++s) {
      Complex acc = 0.0;
      for (int m = 0; m < n_modes; ++m)
        acc += weights(s, m) * phase[static_cast<size_t>(m)];
      f[static_cast<size_t>(s)] = acc;
    }
    for (int s = 0; s < n_report; ++s) {
      const Complex fp = f[static_cast<size_t>(s)];
      const double f2 = std::norm(fp);
      const double n_p = state.n_avg * f2;
      if (n_p < kNegativeFloor)
        throw NonRealError("photon number " + std::to_string(n_p) + " below rounding floor");
      out.photon_number.at(it, s) = n_p;
      const Complex fp2 = fp * fp;
      const Complex anom_term = state.anom * fp2 + state.anom_conj * std::conj(fp2);
      const double a = take_real(anom_term, "quadrature variance");
      out.var_x.at(it, s) = 1.0 + 2.0 * n_p + a;
      out.var_y.at(it, s) = 1.0 + 2.0 * n_p - a;
    }
    for (size_t ip = 0; ip < pair_slots.size(); ++ip) {
      const Complex fa = f[static_cast<size_t>(pair_slots[ip].first)];
      const Complex fb = f[static_cast<size_t>(pair_slots[ip].second)];
      const Complex cross = state.anom * fa * fb + state.anom_conj * std::conj(fa * fb);
      const double c = take_real(cross, "correlation variance");
      out.corr_var.at(it, static_cast<int>(ip)) =
          4.0 + 4.0 * state.n_avg * (std::norm(fa) + std::norm(fb)) - 4.0 * c;
    }
  }
  return out;
}

ObservableSeries photon_number_series(const QuasimodeBasis& basis, const InitialStateMoments& state,
                                      const std::vector<double>& times) {
  ObservableSeries s = evaluate(basis, state, times, {}, {});
  s.var_x = Grid();
  s.var_y = Grid();
  return s;
}

ObservableSeries quadrature_series(const QuasimodeBasis& basis, const InitialStateMoments& state,
                                   const std::vector<double>& times) {
  return evaluate(basis, state, times, {}, {});
}

ObservableSeries correlation_series(const QuasimodeBasis& basis, const InitialStateMoments& state,
                                    const std::vector<double>& times,
                                    const std::vector<std::pair<int, int>>& pairs) {
  return evaluate(basis, state, times, {}, pairs);
}

}  // namespace crowsim::evolve_general
