#pragma once

// Time and time-energy performance of trajectory-constrained schedules.
//
//   J_t  = t_f
//   J_te = t_f + (1/lambda) * integral of sum_i |u_i(t)|^2
//
// For a family with shared amplitude x, J_te = (C1 + C2) w(x) where w is the
// per-radian cost returned by w_value.

#include <optional>
#include <string>
#include <vector>

#include "pulsesynth/scheduler.hpp"
#include "pulsesynth/waveforms.hpp"

namespace pulsesynth {

struct PerformanceParams {
  double lambda;
  /// Amplitude bound L; empty means unbounded.
  std::optional<double> bound;

  void validate() const;
};

struct PerformanceReport {
  WaveformFamily family;
  double c1;
  double c2;
  /// Optimal amplitude under the bound, and the unconstrained optimum.
  double optimal_amplitude;
  double optimal_amplitude_unbounded;
  /// Minimum transition time at amplitude L; empty when unbounded.
  std::optional<double> j_t;
  /// J_te at optimal_amplitude.
  double j_te;
  double j_te_unbounded;
  /// (C1 + C2) / L; empty when unbounded.
  std::optional<double> t_star;
};

double w_value(const WaveformFamily& family, double x, double lambda);

double optimal_amplitude(const WaveformFamily& family, const PerformanceParams& params);

double closed_form_jte(const WaveformFamily& family, double c1, double c2, const PerformanceParams& params);

double closed_form_jt(const WaveformFamily& family, double c1, double c2, double bound);

/// Sum of all pulse energies; pulses on distinct channels may overlap.
double total_energy(const Schedule& schedule);

double measured_jte(const Schedule& schedule, double lambda);

/// One report per family: BB, LN(n) for each order, LS.
std::vector<PerformanceReport> table1(double c1, double c2, const PerformanceParams& params,
                                      const std::vector<int>& orders);

/// Aligned text rendering with columns J_t, J_te (bounded), J_te (unbounded).
std::string format_table(const std::vector<PerformanceReport>& rows);

}  // namespace pulsesynth
