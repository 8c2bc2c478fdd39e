#include "pulsesynth/scheduler.hpp"

#include <algorithm>
#include <cmath>

namespace pulsesynth {

namespace {

constexpr double kTwoPi = 2 * kPi<double>;

struct Rotation {
  Channel channel;
  int index;
  int sign;
  double distance;
};

double shorter_arc(double phi) { return std::min(phi, kTwoPi - phi); }

// Under e^{-i dF z_{N,k}} the phase of level k+1 relative to the others
// advances by 2 dF, so a positive pulse increases phi_{k+1}.
Rotation clear_phase(int j, double phi) {
  const int sign = phi >= kPi<double> ? +1 : -1;
  return {Channel::Z, j - 1, sign, shorter_arc(phi)};
}

Rotation install_phase(int j, double phi) {
  const int sign = phi > kPi<double> ? -1 : +1;
  return {Channel::Z, j - 1, sign, shorter_arc(phi)};
}

// e^{-i dF y_{N,k}} rotates (c_k, c_{k+1}) = (cos, sin)(theta/2) forward by
// dF, so a positive pulse increases theta_{k+1} by 2 dF.
std::vector<Rotation> plan(const GeometricState& initial, const GeometricState& target) {
  const int n = initial.dim();
  const auto& th0 = initial.theta();
  const auto& ths = target.theta();
  const auto& ph0 = initial.phi();
  const auto& phs = target.phi();

  std::vector<Rotation> steps;
  steps.reserve(static_cast<size_t>(slot_count(n)));
  for (int j = 1; j <= n - 1; ++j) steps.push_back(clear_phase(j, ph0(j - 1)));
  for (int m = n - 1; m >= 2; --m) steps.push_back({Channel::Y, m - 1, -1, th0(m - 1)});
  {
    const double d = ths(0) - th0(0);
    steps.push_back({Channel::Y, 0, d < 0 ? -1 : +1, std::abs(d)});
  }
  for (int m = 2; m <= n - 1; ++m) steps.push_back({Channel::Y, m - 1, +1, ths(m - 1)});
  for (int j = 1; j <= n - 1; ++j) steps.push_back(install_phase(j, phs(j - 1)));
  return steps;
}

}  // namespace

int slot_count(int dim) { return 4 * dim - 5; }

Schedule synthesize(const TransitionSpec& spec) {
  if (spec.initial.dim() != spec.dim || spec.target.dim() != spec.dim) {
    throw InvalidInput("transition spec: initial/target dimension does not match dim = " + std::to_string(spec.dim));
  }
  const int slots = slot_count(spec.dim);
  if (spec.amplitudes.size() != 1 && spec.amplitudes.size() != static_cast<size_t>(slots)) {
    throw InvalidInput("transition spec: expected 1 or " + std::to_string(slots) + " amplitudes, got " +
                       std::to_string(spec.amplitudes.size()));
  }
  for (double a : spec.amplitudes) {
    if (!(a > 0) || !std::isfinite(a)) throw InvalidInput("transition spec: amplitudes must be positive and finite");
  }

  Schedule schedule;
  schedule.dim = spec.dim;
  schedule.family = spec.family;

  // Same angles: nothing to do, even though the three stages would undo and
  // redo the phases and higher polar angles.
  if (spec.initial.theta() == spec.target.theta() && spec.initial.phi() == spec.target.phi()) return schedule;

  const auto steps = plan(spec.initial, spec.target);
  double t = 0.0;
  for (size_t slot = 0; slot < steps.size(); ++slot) {
    const Rotation& r = steps[slot];
    if (r.distance == 0.0) continue;
    const double amplitude = spec.amplitudes.size() == 1 ? spec.amplitudes.front() : spec.amplitudes[slot];
    const double width = duration_for_area(spec.family, r.distance / 2, amplitude);
    if (!(t + width > t)) continue;  // below time resolution
    schedule.pulses.push_back({r.channel, r.index, r.sign, amplitude, t, t + width, spec.family});
    t += width;
    schedule.boundaries.push_back(t);
  }
  return schedule;
}

std::pair<double, double> c_constants(const GeometricState& initial, const GeometricState& target) {
  if (initial.dim() != target.dim()) throw InvalidInput("c_constants: dimension mismatch");
  const int n = initial.dim();
  double c1 = std::abs(initial.theta()(0) - target.theta()(0));
  for (int l = 2; l <= n - 1; ++l) c1 += initial.theta()(l - 1) + target.theta()(l - 1);
  double c2 = 0.0;
  for (int k = 1; k <= n - 1; ++k) c2 += shorter_arc(initial.phi()(k - 1)) + shorter_arc(target.phi()(k - 1));
  return {c1, c2};
}

double transition_time(const Schedule& schedule) {
  if (schedule.boundaries.empty()) return 0.0;
  return schedule.boundaries.back() - schedule.boundaries.front();
}

bool is_sequential(const Schedule& schedule) {
  std::vector<const Pulse*> order;
  order.reserve(schedule.pulses.size());
  for (const auto& p : schedule.pulses) order.push_back(&p);
  std::sort(order.begin(), order.end(), [](const Pulse* a, const Pulse* b) { return a->t0 < b->t0; });
  for (size_t j = 1; j < order.size(); ++j) {
    if (order[j]->t0 < order[j - 1]->t1) return false;
  }
  return true;
}

void validate(const Schedule& schedule) {
  if (schedule.dim < 2) throw InvalidInput("schedule dim must be >= 2");
  for (const auto& p : schedule.pulses) {
    validate(p);
    if (p.index > schedule.dim - 2) {
      throw InvalidInput("pulse channel index " + std::to_string(p.index) + " exceeds dim-2");
    }
  }
  if (!std::is_sorted(schedule.boundaries.begin(), schedule.boundaries.end())) {
    throw InvalidInput("schedule boundaries must be non-decreasing");
  }
}

}  // namespace pulsesynth
