#include "pulsesynth/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace pulsesynth {

std::string format_number(double v) {
  if (!std::isfinite(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void dump_value(std::ostream& out, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<size_t>(indent * depth), ' ');
  if (j.is_number_float()) {
    const double v = j.get<double>();
    out << (std::isfinite(v) ? format_number(v) : "null");
  } else if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out << ",\n";
      first = false;
      out << pad << Json(it.key()).dump() << ": ";
      dump_value(out, it.value(), indent, depth + 1);
    }
    out << '\n' << close_pad << '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      out << "[]";
      return;
    }
    bool flat = true;
    for (const auto& e : j) flat = flat && is_scalar(e);
    if (flat) {
      out << '[';
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out << ", ";
        dump_value(out, j[i], indent, depth + 1);
      }
      out << ']';
      return;
    }
    out << "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      if (i) out << ",\n";
      out << pad;
      dump_value(out, j[i], indent, depth + 1);
    }
    out << '\n' << close_pad << ']';
  } else {
    out << j.dump();
  }
}

double number_at(const Json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
  return v;
}

const Json& require(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw ConfigError(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(field + "." + key, "missing");
  return *it;
}

RVector<double> angles_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected an array of radians");
  RVector<double> v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number_at(j[i], field);
  return v;
}

VectorXcd amplitudes_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected an array of [re, im] pairs");
  VectorXcd c(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    const Json& e = j[i];
    if (e.is_array() && e.size() == 2) {
      c(static_cast<Eigen::Index>(i)) = {number_at(e[0], where), number_at(e[1], where)};
    } else if (e.is_number()) {
      c(static_cast<Eigen::Index>(i)) = number_at(e, where);
    } else {
      throw ConfigError(where, "expected [re, im]");
    }
  }
  return c;
}

Json angles_to_json(const RVector<double>& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

}  // namespace

std::string dump_json(const Json& doc, int indent) {
  std::ostringstream out;
  dump_value(out, doc, indent, 0);
  out << '\n';
  return out.str();
}

Json state_to_json(const PureState& state) {
  Json a = Json::array();
  for (int n = 0; n < state.dim(); ++n) a.push_back(Json::array({state[n].real(), state[n].imag()}));
  return Json{{"amplitudes", a}};
}

Json state_to_json(const GeometricState& state) {
  return Json{{"theta", angles_to_json(state.theta())}, {"phi", angles_to_json(state.phi())}};
}

GeometricState geometric_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) throw ConfigError(field, "expected an object with amplitudes or theta/phi");
  const bool has_amplitudes = j.contains("amplitudes");
  const bool has_angles = j.contains("theta") || j.contains("phi");
  if (has_amplitudes && has_angles) throw ConfigError(field, "give either amplitudes or theta/phi, not both");
  try {
    if (has_amplitudes) {
      return to_geometric(PureState::normalized(amplitudes_from_json(j.at("amplitudes"), field + ".amplitudes")));
    }
    if (has_angles) {
      return GeometricState(angles_from_json(require(j, "theta", field), field + ".theta"),
                            angles_from_json(require(j, "phi", field), field + ".phi"));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ConfigError(field, e.what());
  }
  throw ConfigError(field, "expected amplitudes or theta/phi");
}

PureState pure_state_from_json(const Json& j, const std::string& field) {
  if (j.is_object() && j.contains("amplitudes") && !j.contains("theta") && !j.contains("phi")) {
    try {
      return PureState::normalized(amplitudes_from_json(j.at("amplitudes"), field + ".amplitudes"));
    } catch (const ConfigError&) {
      throw;
    } catch (const InvalidInput& e) {
      throw ConfigError(field, e.what());
    }
  }
  return to_amplitudes(geometric_from_json(j, field));
}

Json pulse_to_json(const Pulse& pulse) {
  Json j{{"channel", channel_tag(pulse.channel)},
         {"index", pulse.index},
         {"sign", pulse.sign},
         {"amplitude", pulse.amplitude},
         {"t0", pulse.t0},
         {"t1", pulse.t1},
         {"family", pulse.family.tag()}};
  if (pulse.family.family() == Family::LocalPoly) j["order"] = pulse.family.order();
  return j;
}

Pulse pulse_from_json(const Json& j, const std::string& field) {
  const Json& ch = require(j, "channel", field);
  if (!ch.is_string() || (ch != "y" && ch != "z")) throw ConfigError(field + ".channel", "expected \"y\" or \"z\"");
  const Json& index = require(j, "index", field);
  if (!index.is_number_integer()) throw ConfigError(field + ".index", "expected an integer");
  const Json& sign = require(j, "sign", field);
  if (!sign.is_number_integer()) throw ConfigError(field + ".sign", "expected +1 or -1");
  const Json& fam = require(j, "family", field);
  if (!fam.is_string()) throw ConfigError(field + ".family", "expected \"bb\", \"ls\" or \"ln\"");

  int order = 0;
  if (fam == "ln") {
    const Json& o = require(j, "order", field);
    if (!o.is_number_integer()) throw ConfigError(field + ".order", "expected an integer");
    order = o.get<int>();
  }
  try {
    Pulse p{ch == "y" ? Channel::Y : Channel::Z,
            index.get<int>(),
            sign.get<int>(),
            number_at(require(j, "amplitude", field), field + ".amplitude"),
            number_at(require(j, "t0", field), field + ".t0"),
            number_at(require(j, "t1", field), field + ".t1"),
            family_from_tag(fam.get<std::string>(), order)};
    validate(p);
    return p;
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ConfigError(field, e.what());
  }
}

Json schedule_to_json(const Schedule& schedule) {
  Json pulses = Json::array();
  for (const auto& p : schedule.pulses) pulses.push_back(pulse_to_json(p));
  Json j{{"dim", schedule.dim},
         {"family", schedule.family.tag()},
         {"pulses", pulses},
         {"boundaries", schedule.boundaries},
         {"t_f", transition_time(schedule)}};
  if (schedule.family.family() == Family::LocalPoly) j["order"] = schedule.family.order();
  return j;
}

Schedule schedule_from_json(const Json& j) {
  Schedule s;
  const Json& dim = require(j, "dim", "schedule");
  if (!dim.is_number_integer() || dim.get<int>() < 2) throw ConfigError("schedule.dim", "expected an integer >= 2");
  s.dim = dim.get<int>();
  const Json& fam = require(j, "family", "schedule");
  if (!fam.is_string()) throw ConfigError("schedule.family", "expected a family tag");
  int order = 0;
  if (fam == "ln") {
    const Json& o = require(j, "order", "schedule");
    if (!o.is_number_integer()) throw ConfigError("schedule.order", "expected an integer");
    order = o.get<int>();
  }
  try {
    s.family = family_from_tag(fam.get<std::string>(), order);
  } catch (const InvalidInput& e) {
    throw ConfigError("schedule.family", e.what());
  }
  const Json& pulses = require(j, "pulses", "schedule");
  if (!pulses.is_array()) throw ConfigError("schedule.pulses", "expected an array");
  for (size_t i = 0; i < pulses.size(); ++i) {
    s.pulses.push_back(pulse_from_json(pulses[i], "schedule.pulses[" + std::to_string(i) + "]"));
  }
  const Json& boundaries = require(j, "boundaries", "schedule");
  if (!boundaries.is_array() || boundaries.empty()) throw ConfigError("schedule.boundaries", "expected a non-empty array");
  s.boundaries.clear();
  for (const auto& b : boundaries) s.boundaries.push_back(number_at(b, "schedule.boundaries"));
  try {
    validate(s);
  } catch (const InvalidInput& e) {
    throw ConfigError("schedule", e.what());
  }
  return s;
}

Json report_to_json(const PerformanceReport& r) {
  Json j{{"family", r.family.tag()},
         {"label", r.family.label()},
         {"c1", r.c1},
         {"c2", r.c2},
         {"optimal_amplitude", r.optimal_amplitude},
         {"optimal_amplitude_unbounded", r.optimal_amplitude_unbounded},
         {"j_te", r.j_te},
         {"j_te_unbounded", r.j_te_unbounded},
         {"j_t", r.j_t ? Json(*r.j_t) : Json(nullptr)},
         {"t_star", r.t_star ? Json(*r.t_star) : Json(nullptr)}};
  if (r.family.family() == Family::LocalPoly) j["order"] = r.family.order();
  return j;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  if (trajectory.states.empty()) return;
  const int dim = trajectory.states.front().dim();
  const bool with_fidelity = !trajectory.fidelities.empty();
  const bool qubit = dim == 2;
  out << "t";
  for (int n = 0; n < dim; ++n) out << ",re_c" << n << ",im_c" << n;
  if (with_fidelity) out << ",fidelity";
  if (qubit) out << ",bloch_x,bloch_y,bloch_z";
  out << '\n';
  for (size_t r = 0; r < trajectory.states.size(); ++r) {
    const PureState& s = trajectory.states[r];
    out << format_number(trajectory.times[r]);
    for (int n = 0; n < dim; ++n) out << ',' << format_number(s[n].real()) << ',' << format_number(s[n].imag());
    if (with_fidelity) out << ',' << format_number(trajectory.fidelities[r]);
    if (qubit) {
      const auto b = bloch_coordinates(s);
      out << ',' << format_number(b[0]) << ',' << format_number(b[1]) << ',' << format_number(b[2]);
    }
    out << '\n';
  }
}

void write_controls_csv(std::ostream& out, const ControlTrace& trace) {
  const Eigen::Index channels = trace.values.cols() / 2;
  out << "t";
  for (Eigen::Index k = 0; k < channels; ++k) out << ",u_y" << k << ",u_z" << k;
  out << '\n';
  for (size_t r = 0; r < trace.times.size(); ++r) {
    out << format_number(trace.times[r]);
    for (Eigen::Index c = 0; c < trace.values.cols(); ++c) {
      out << ',' << format_number(trace.values(static_cast<Eigen::Index>(r), c));
    }
    out << '\n';
  }
}

}  // namespace pulsesynth
