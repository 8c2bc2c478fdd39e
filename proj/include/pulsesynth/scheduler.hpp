#pragma once

// Three-stage pulse construction for a transition between two pure states:
//
//   1.  N-1 z pulses zeroing the initial phases along the shorter arc
//   2a. N-2 y pulses driving theta_m -> 0, m = N-1 down to 2
//   2b. one y_0 pulse moving theta_1 to its target value
//   2c. N-2 y pulses driving theta_m: 0 -> target, m = 2 up to N-1
//   3.  N-1 z pulses installing the target phases along the shorter arc
//
// Every pulse carries area delta/2, where delta is the angular distance it
// covers. Pulses with zero distance are dropped.

#include <utility>
#include <vector>

#include "pulsesynth/states.hpp"
#include "pulsesynth/waveforms.hpp"

namespace pulsesynth {

struct TransitionSpec {
  int dim;
  GeometricState initial;
  GeometricState target;
  WaveformFamily family;
  /// One shared amplitude, or one per slot (4N-5 entries in stage order,
  /// including the slots of pulses that end up dropped).
  std::vector<double> amplitudes;
};

struct Schedule {
  int dim = 2;
  WaveformFamily family = WaveformFamily::local_sine();
  std::vector<Pulse> pulses;
  /// t_0 <= t_1 <= ...; pulse j of a synthesized schedule occupies [t_j, t_{j+1}).
  std::vector<double> boundaries{0.0};
};

/// Number of pulse slots in the construction, 4N-5.
int slot_count(int dim);

Schedule synthesize(const TransitionSpec& spec);

/// Polar-angle and phase-angle distances of a transition. (C1 + C2) / 2 is
/// the total pulse area of the synthesized schedule.
std::pair<double, double> c_constants(const GeometricState& initial, const GeometricState& target);

double transition_time(const Schedule& schedule);

/// True when no two pulses overlap in time, so the schedule factors into
/// single-channel rotations.
bool is_sequential(const Schedule& schedule);

/// Throws InvalidInput when pulses are malformed or reference channels
/// outside [0, dim-2].
void validate(const Schedule& schedule);

}  // namespace pulsesynth
