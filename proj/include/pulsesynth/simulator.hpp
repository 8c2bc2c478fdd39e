#pragma once

// Two independent propagators for
//
//   i d/dt psi = sum_k [u_{y,k}(t) y_{N,k} + u_{z,k}(t) z_{N,k}] psi
//
// propagate_exact composes closed-form rotations, one per pulse.
// propagate_numeric integrates the equation with fixed-step RK4 and never
// touches the closed forms.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "pulsesynth/scheduler.hpp"
#include "pulsesynth/states.hpp"

namespace pulsesynth {

struct ControlTerm {
  Channel channel;
  int index;
  std::function<double(double)> value;
};

/// Scalar control amplitudes u_{y,k}(t), u_{z,k}(t) as a sum of terms.
class ControlField {
 public:
  explicit ControlField(int dim);

  void add(Channel channel, int index, std::function<double(double)> value);
  /// Times where the field may be non-smooth; the integrator never steps across one.
  void add_breakpoint(double t);

  int dim() const { return dim_; }
  const std::vector<ControlTerm>& terms() const { return terms_; }
  std::vector<double> breakpoints() const;

  double channel_value(Channel channel, int index, double t) const;

 private:
  int dim_;
  std::vector<ControlTerm> terms_;
  std::vector<double> breakpoints_;
};

ControlField schedule_to_field(const Schedule& schedule);

struct Trajectory {
  std::vector<double> times;
  std::vector<PureState> states;
  /// Overlap with the reference state; empty when no reference was given.
  std::vector<double> fidelities;
  /// Largest | ||psi|| - 1 | seen after any step, before renormalization.
  double max_norm_error = 0.0;
  int renormalizations = 0;

  const PureState& final_state() const { return states.back(); }
};

struct NumericOptions {
  /// Upper bound on the RK4 step.
  double step;
  /// Minimum number of steps between consecutive breakpoints.
  int min_steps_per_segment = 1;
  /// Record every n-th step (the first and last states are always recorded).
  int sample_every = 1;
  std::optional<PureState> reference;
};

/// Drift beyond this norm error triggers renormalization, which is counted
/// in Trajectory::renormalizations.
inline constexpr double kRenormalizeThreshold = 1e-9;

Trajectory propagate_numeric(const ControlField& field, const PureState& initial, double t_end,
                             const NumericOptions& options);

Trajectory propagate_numeric(const ControlField& field, const PureState& initial, double t_end, double step);

/// Product of the per-pulse closed-form propagators, latest pulse leftmost.
MatrixXcd exact_propagator(const Schedule& schedule);

PureState propagate_exact(const Schedule& schedule, const PureState& initial);

/// Bloch vector (x, y, z) of a qubit state.
std::array<double, 3> bloch_coordinates(const PureState& state);

/// Sampled control trace: one row per time, columns u_{y,0}, u_{z,0}, ...,
/// u_{y,N-2}, u_{z,N-2}.
struct ControlTrace {
  std::vector<double> times;
  Eigen::MatrixXd values;
};

ControlTrace sample_controls(const ControlField& field, const std::vector<double>& times);

/// `samples_per_pulse` uniform samples on each pulse interval plus t_f.
std::vector<double> pulse_sample_times(const Schedule& schedule, int samples_per_pulse = 512);

}  // namespace pulsesynth
