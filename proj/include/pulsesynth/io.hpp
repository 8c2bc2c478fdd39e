#pragma once

// JSON and CSV surfaces: states, pulses, schedules, performance reports,
// trajectories and control traces.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pulsesynth/performance.hpp"
#include "pulsesynth/scheduler.hpp"
#include "pulsesynth/simulator.hpp"
#include "pulsesynth/states.hpp"

namespace pulsesynth {

using Json = nlohmann::json;

/// Invalid input traced to a named field of a JSON document.
class ConfigError : public InvalidInput {
 public:
  ConfigError(std::string field, const std::string& message)
      : InvalidInput(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Serializes with sorted keys and every floating-point value printed with
/// 17 significant digits, so equal documents produce equal bytes.
std::string dump_json(const Json& doc, int indent = 2);

Json state_to_json(const PureState& state);
Json state_to_json(const GeometricState& state);

/// Accepts {"amplitudes": [[re, im], ...]} (normalized on read) or
/// {"theta": [...], "phi": [...]} in radians. `field` names the document
/// location in error messages.
GeometricState geometric_from_json(const Json& j, const std::string& field = "state");
PureState pure_state_from_json(const Json& j, const std::string& field = "state");

Json pulse_to_json(const Pulse& pulse);
Pulse pulse_from_json(const Json& j, const std::string& field = "pulse");

Json schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const Json& j);

Json report_to_json(const PerformanceReport& report);

/// t, re/im of each amplitude, fidelity (when recorded), bloch_x/y/z for qubits.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

/// t, u_y0, u_z0, ..., u_y{N-2}, u_z{N-2}
void write_controls_csv(std::ostream& out, const ControlTrace& trace);

/// %.17g rendering used by every machine-readable output.
std::string format_number(double v);

}  // namespace pulsesynth
