#include "pulsesynth/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "pulsesynth/operators.hpp"

namespace pulsesynth {

ControlField::ControlField(int dim) : dim_(dim) {
  if (dim < 2) throw InvalidInput("control field dim must be >= 2");
}

void ControlField::add(Channel channel, int index, std::function<double(double)> value) {
  if (index < 0 || index > dim_ - 2) throw InvalidInput("control channel index out of range");
  terms_.push_back({channel, index, std::move(value)});
}

void ControlField::add_breakpoint(double t) { breakpoints_.push_back(t); }

std::vector<double> ControlField::breakpoints() const {
  std::vector<double> b = breakpoints_;
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

double ControlField::channel_value(Channel channel, int index, double t) const {
  double u = 0.0;
  for (const auto& term : terms_) {
    if (term.channel == channel && term.index == index) u += term.value(t);
  }
  return u;
}

ControlField schedule_to_field(const Schedule& schedule) {
  ControlField field(schedule.dim);
  for (const auto& p : schedule.pulses) {
    field.add(p.channel, p.index, [p](double t) { return evaluate(p, t); });
    field.add_breakpoint(p.t0);
    field.add_breakpoint(p.t1);
    if (p.family.family() == Family::LocalPoly) field.add_breakpoint(0.5 * (p.t0 + p.t1));
  }
  return field;
}

namespace {

class Rhs {
 public:
  explicit Rhs(const ControlField& field) : field_(field) {
    const int n = field.dim();
    for (int k = 0; k <= n - 2; ++k) {
      y_.push_back(build<double>({OperatorKind::Y, n, k}));
      z_.push_back(build<double>({OperatorKind::Z, n, k}));
    }
    uy_.resize(n - 1);
    uz_.resize(n - 1);
    h_.resize(n, n);
  }

  // -i H(t) psi
  VectorXcd operator()(double t, const VectorXcd& psi) {
    std::fill(uy_.begin(), uy_.end(), 0.0);
    std::fill(uz_.begin(), uz_.end(), 0.0);
    for (const auto& term : field_.terms()) {
      const double u = term.value(t);
      if (!std::isfinite(u)) throw IntegrationError("control field is not finite at t = " + std::to_string(t));
      (term.channel == Channel::Y ? uy_ : uz_)[term.index] += u;
    }
    h_.setZero();
    for (size_t k = 0; k < y_.size(); ++k) {
      if (uy_[k] != 0.0) h_ += uy_[k] * y_[k];
      if (uz_[k] != 0.0) h_ += uz_[k] * z_[k];
    }
    return std::complex<double>(0, -1) * (h_ * psi);
  }

 private:
  const ControlField& field_;
  std::vector<MatrixXcd> y_, z_;
  std::vector<double> uy_, uz_;
  MatrixXcd h_;
};

}  // namespace

Trajectory propagate_numeric(const ControlField& field, const PureState& initial, double t_end,
                             const NumericOptions& options) {
  if (initial.dim() != field.dim()) throw InvalidInput("propagate_numeric: state and field dimensions differ");
  if (!(options.step > 0)) throw InvalidInput("propagate_numeric: step must be positive");
  if (!(t_end >= 0) || !std::isfinite(t_end)) throw InvalidInput("propagate_numeric: t_end must be finite and >= 0");
  if (options.min_steps_per_segment < 1 || options.sample_every < 1) {
    throw InvalidInput("propagate_numeric: step counts must be >= 1");
  }
  if (options.reference && options.reference->dim() != initial.dim()) {
    throw InvalidInput("propagate_numeric: reference dimension differs");
  }

  std::vector<double> knots{0.0};
  for (double b : field.breakpoints()) {
    if (b > 0.0 && b < t_end) knots.push_back(b);
  }
  if (t_end > 0.0) knots.push_back(t_end);

  Trajectory out;
  auto record = [&](double t, const VectorXcd& psi) {
    out.times.push_back(t);
    out.states.emplace_back(psi);
    if (options.reference) out.fidelities.push_back(fidelity(*options.reference, out.states.back()));
  };

  Rhs rhs(field);
  VectorXcd psi = initial.amplitudes();
  record(0.0, psi);
  long step_count = 0;
  for (size_t s = 0; s + 1 < knots.size(); ++s) {
    const double a = knots[s];
    const double b = knots[s + 1];
    const long n = std::max<long>(options.min_steps_per_segment, static_cast<long>(std::ceil((b - a) / options.step)));
    const double h = (b - a) / static_cast<double>(n);
    // Stage times at the segment end are pulled just inside so half-open
    // supports contribute their left limit.
    const double b_inside = std::nextafter(b, a);
    for (long i = 0; i < n; ++i) {
      const double t = a + static_cast<double>(i) * h;
      const double t_mid = t + 0.5 * h;
      const double t_next = i + 1 == n ? b_inside : a + static_cast<double>(i + 1) * h;
      const VectorXcd k1 = rhs(t, psi);
      const VectorXcd k2 = rhs(t_mid, psi + (0.5 * h) * k1);
      const VectorXcd k3 = rhs(t_mid, psi + (0.5 * h) * k2);
      const VectorXcd k4 = rhs(t_next, psi + h * k3);
      psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

      const double norm = psi.norm();
      const double drift = std::abs(norm - 1.0);
      out.max_norm_error = std::max(out.max_norm_error, drift);
      if (drift > kRenormalizeThreshold) {
        psi /= norm;
        ++out.renormalizations;
      }
      ++step_count;
      const bool last = s + 2 == knots.size() && i + 1 == n;
      if (last || step_count % options.sample_every == 0) record(i + 1 == n ? b : a + static_cast<double>(i + 1) * h, psi);
    }
  }
  return out;
}

Trajectory propagate_numeric(const ControlField& field, const PureState& initial, double t_end, double step) {
  return propagate_numeric(field, initial, t_end, NumericOptions{step, 1, 1, std::nullopt});
}

namespace {

std::vector<const Pulse*> time_ordered(const Schedule& schedule) {
  validate(schedule);
  if (!is_sequential(schedule)) {
    throw UnsupportedSchedule(
        "schedule has overlapping pulses; the closed-form path needs single-channel pulses (use propagate_numeric)");
  }
  std::vector<const Pulse*> order;
  for (const auto& p : schedule.pulses) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(), [](const Pulse* a, const Pulse* b) { return a->t0 < b->t0; });
  return order;
}

MatrixXcd pulse_propagator(const Pulse& p, int dim) {
  const double delta_f = p.sign * area(p);
  return p.channel == Channel::Y ? expm_y(delta_f, dim, p.index) : expm_z(delta_f, dim, p.index);
}

}  // namespace

MatrixXcd exact_propagator(const Schedule& schedule) {
  MatrixXcd u = MatrixXcd::Identity(schedule.dim, schedule.dim);
  for (const Pulse* p : time_ordered(schedule)) u = pulse_propagator(*p, schedule.dim) * u;
  return u;
}

PureState propagate_exact(const Schedule& schedule, const PureState& initial) {
  if (initial.dim() != schedule.dim) throw InvalidInput("propagate_exact: state and schedule dimensions differ");
  VectorXcd psi = initial.amplitudes();
  for (const Pulse* p : time_ordered(schedule)) psi = pulse_propagator(*p, schedule.dim) * psi;
  return PureState(std::move(psi));
}

std::array<double, 3> bloch_coordinates(const PureState& state) {
  if (state.dim() != 2) throw InvalidInput("bloch_coordinates needs a qubit (dim = 2), got dim = " + std::to_string(state.dim()));
  const std::complex<double> c0 = state[0];
  const std::complex<double> c1 = state[1];
  const std::complex<double> coherence = std::conj(c0) * c1;
  return {2 * coherence.real(), 2 * coherence.imag(), std::norm(c0) - std::norm(c1)};
}

ControlTrace sample_controls(const ControlField& field, const std::vector<double>& times) {
  const int channels = field.dim() - 1;
  ControlTrace trace{times, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(times.size()), 2 * channels)};
  for (size_t r = 0; r < times.size(); ++r) {
    for (const auto& term : field.terms()) {
      const int col = 2 * term.index + (term.channel == Channel::Y ? 0 : 1);
      trace.values(static_cast<Eigen::Index>(r), col) += term.value(times[r]);
    }
  }
  return trace;
}

std::vector<double> pulse_sample_times(const Schedule& schedule, int samples_per_pulse) {
  if (samples_per_pulse < 1) throw InvalidInput("samples_per_pulse must be >= 1");
  std::vector<double> times;
  for (const auto& p : schedule.pulses) {
    for (int i = 0; i < samples_per_pulse; ++i) {
      times.push_back(p.t0 + p.duration() * static_cast<double>(i) / samples_per_pulse);
    }
  }
  double end = 0.0;
  for (const auto& p : schedule.pulses) end = std::max(end, p.t1);
  times.push_back(end);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

}  // namespace pulsesynth
