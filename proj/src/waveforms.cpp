#include "pulsesynth/waveforms.hpp"

#include <cmath>

namespace pulsesynth {

WaveformFamily WaveformFamily::local_poly(int order) {
  if (order < 1) throw InvalidInput("local polynomial order must be >= 1, got " + std::to_string(order));
  return WaveformFamily(Family::LocalPoly, order);
}

std::string WaveformFamily::tag() const {
  switch (family_) {
    case Family::BangBang:
      return "bb";
    case Family::LocalSine:
      return "ls";
    case Family::LocalPoly:
      return "ln";
  }
  return "?";
}

std::string WaveformFamily::label() const {
  switch (family_) {
    case Family::BangBang:
      return "BB";
    case Family::LocalSine:
      return "LS";
    case Family::LocalPoly:
      return "LN(" + std::to_string(order_) + ")";
  }
  return "?";
}

WaveformFamily family_from_tag(const std::string& tag, int order) {
  if (tag == "bb") return WaveformFamily::bang_bang();
  if (tag == "ls") return WaveformFamily::local_sine();
  if (tag == "ln") return WaveformFamily::local_poly(order);
  throw InvalidInput("unknown waveform family '" + tag + "' (expected bb, ls or ln)");
}

std::string channel_tag(Channel channel) { return channel == Channel::Y ? "y" : "z"; }

void validate(const Pulse& pulse) {
  if (!(pulse.t0 < pulse.t1)) throw InvalidInput("pulse needs t0 < t1");
  if (!(pulse.amplitude > 0) || !std::isfinite(pulse.amplitude)) throw InvalidInput("pulse amplitude must be positive");
  if (pulse.sign != 1 && pulse.sign != -1) throw InvalidInput("pulse sign must be +1 or -1");
  if (pulse.index < 0) throw InvalidInput("pulse channel index must be >= 0");
}

double shape(const WaveformFamily& family, double amplitude, double t0, double t1, double t) {
  if (t < t0 || t >= t1) return 0.0;
  const double width = t1 - t0;
  switch (family.family()) {
    case Family::BangBang:
      return amplitude;
    case Family::LocalSine:
      return amplitude * std::sin(kPi<double> * (t - t0) / width);
    case Family::LocalPoly: {
      // Both branch brackets lie in [0, 1]: A (1 - |2t - t0 - t1|^n / width^n).
      const double mid = 0.5 * (t0 + t1);
      const double bracket = t < mid ? (t1 + t0 - 2 * t) / width : (2 * t - (t1 + t0)) / width;
      return -amplitude * std::pow(bracket, family.order()) + amplitude;
    }
  }
  return 0.0;
}

double evaluate(const Pulse& pulse, double t) {
  return pulse.sign * shape(pulse.family, pulse.amplitude, pulse.t0, pulse.t1, t);
}

double area_per_amplitude_time(const WaveformFamily& family) {
  switch (family.family()) {
    case Family::BangBang:
      return 1.0;
    case Family::LocalSine:
      return 2.0 / kPi<double>;
    case Family::LocalPoly: {
      const double n = family.order();
      return n / (n + 1);
    }
  }
  return 0.0;
}

double energy_per_amplitude2_time(const WaveformFamily& family) {
  switch (family.family()) {
    case Family::BangBang:
      return 1.0;
    case Family::LocalSine:
      return 0.5;
    case Family::LocalPoly: {
      const double n = family.order();
      return 2 * n * n / ((2 * n + 1) * (n + 1));
    }
  }
  return 0.0;
}

double area(const Pulse& pulse) {
  return pulse.amplitude * pulse.duration() * area_per_amplitude_time(pulse.family);
}

double energy(const Pulse& pulse) {
  return pulse.amplitude * pulse.amplitude * pulse.duration() * energy_per_amplitude2_time(pulse.family);
}

double duration_for_area(const WaveformFamily& family, double target_area, double amplitude) {
  if (!(amplitude > 0)) throw InvalidInput("amplitude must be positive");
  if (target_area < 0) throw InvalidInput("target area must be non-negative");
  return target_area / (amplitude * area_per_amplitude_time(family));
}

}  // namespace pulsesynth
