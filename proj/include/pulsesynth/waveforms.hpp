#pragma once

#include <string>

#include "pulsesynth/types.hpp"

namespace pulsesynth {

enum class Family { BangBang, LocalSine, LocalPoly };

/// A waveform family; `order` is meaningful only for LocalPoly.
class WaveformFamily {
 public:
  static WaveformFamily bang_bang() { return WaveformFamily(Family::BangBang, 0); }
  static WaveformFamily local_sine() { return WaveformFamily(Family::LocalSine, 0); }
  static WaveformFamily local_poly(int order);

  Family family() const { return family_; }
  int order() const { return order_; }

  /// "bb", "ls" or "ln"
  std::string tag() const;
  /// Row label for reports, e.g. "BB", "LS", "LN(5)".
  std::string label() const;

  friend bool operator==(const WaveformFamily&, const WaveformFamily&) = default;

 private:
  WaveformFamily(Family family, int order) : family_(family), order_(order) {}

  Family family_;
  int order_;
};

/// Parses "bb", "ls" or "ln" (the latter requires order >= 1).
WaveformFamily family_from_tag(const std::string& tag, int order = 0);

enum class Channel { Y, Z };

std::string channel_tag(Channel channel);

/// One local waveform on one control channel, supported on [t0, t1).
struct Pulse {
  Channel channel;
  int index;
  int sign;
  double amplitude;
  double t0;
  double t1;
  WaveformFamily family;

  double duration() const { return t1 - t0; }
};

/// Throws InvalidInput unless t0 < t1, amplitude > 0, sign = +-1, index >= 0.
void validate(const Pulse& pulse);

/// Unsigned waveform value at t for a pulse of the family on [t0, t1).
double shape(const WaveformFamily& family, double amplitude, double t0, double t1, double t);

double evaluate(const Pulse& pulse, double t);

/// Unsigned integral of the waveform over its support.
double area(const Pulse& pulse);

/// Integral of the squared waveform over its support.
double energy(const Pulse& pulse);

/// Area of a unit-duration pulse of amplitude A, divided by A.
double area_per_amplitude_time(const WaveformFamily& family);

/// Energy of a unit-duration pulse of amplitude A, divided by A^2.
double energy_per_amplitude2_time(const WaveformFamily& family);

/// Duration a pulse of the family needs at amplitude A to accumulate `target_area`.
double duration_for_area(const WaveformFamily& family, double target_area, double amplitude);

}  // namespace pulsesynth
