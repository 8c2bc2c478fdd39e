#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pulsesynth/scheduler.hpp"
#include "pulsesynth/simulator.hpp"

using namespace pulsesynth;
using Angles = RVector<double>;

namespace {

constexpr double pi = kPi<double>;

Angles angles(std::initializer_list<double> v) {
  Angles a(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) a(i++) = x;
  return a;
}

const GeometricState qubit_initial(angles({0}), angles({0}));
const GeometricState qubit_target(angles({pi / 2}), angles({pi / 2}));

double total_area(const Schedule& s) {
  double a = 0.0;
  for (const auto& p : s.pulses) a += area(p);
  return a;
}

std::vector<WaveformFamily> families() {
  return {WaveformFamily::bang_bang(), WaveformFamily::local_sine(), WaveformFamily::local_poly(1),
          WaveformFamily::local_poly(4)};
}

}  // namespace

TEST_CASE("no rotation needed gives an empty schedule") {
  std::mt19937_64 rng(5);
  const auto g = testing::random_geometric(rng, 4);
  const auto s = synthesize({4, g, g, WaveformFamily::local_sine(), {1.0}});
  CHECK(s.pulses.empty());
  CHECK(transition_time(s) == 0.0);
  CHECK(s.boundaries == std::vector<double>{0.0});
  CHECK(fidelity(propagate_exact(s, to_amplitudes(g)), to_amplitudes(g)) >= 1 - 1e-12);
}

TEST_CASE("worked qubit example") {
  const auto s = synthesize({2, qubit_initial, qubit_target, WaveformFamily::local_sine(), {1.0}});
  REQUIRE(s.pulses.size() == 2);
  const Pulse& y = s.pulses[0];
  const Pulse& z = s.pulses[1];
  CHECK(y.channel == Channel::Y);
  CHECK(y.index == 0);
  CHECK(y.sign == +1);
  CHECK(y.t0 == 0.0);
  CHECK(y.t1 == doctest::Approx(pi * pi / 8).epsilon(1e-15));
  CHECK(z.channel == Channel::Z);
  CHECK(z.t0 == doctest::Approx(pi * pi / 8).epsilon(1e-15));
  CHECK(z.t1 == doctest::Approx(pi * pi / 4).epsilon(1e-15));
  CHECK(transition_time(s) == doctest::Approx(pi * pi / 4).epsilon(1e-15));

  // The phase pulse must advance the relative phase of |1> by +pi/2.
  CHECK(z.sign == +1);
  CHECK(fidelity(propagate_exact(s, PureState::basis(2, 0)), to_amplitudes(qubit_target)) >= 1 - 1e-14);

  // A negative phase pulse of the same area lands on the orthogonal state.
  Schedule flipped = s;
  flipped.pulses[1].sign = -1;
  CHECK(fidelity(propagate_exact(flipped, PureState::basis(2, 0)), to_amplitudes(qubit_target)) < 1e-14);
}

TEST_CASE("stage ordering for a qutrit") {
  const GeometricState a(angles({1.0, 2.0}), angles({0.5, 4.0}));
  const GeometricState b(angles({2.5, 0.7}), angles({3.0, 6.0}));
  const auto s = synthesize({3, a, b, WaveformFamily::bang_bang(), {1.0}});
  REQUIRE(s.pulses.size() == 7);
  const std::vector<std::pair<Channel, int>> want{{Channel::Z, 0}, {Channel::Z, 1}, {Channel::Y, 1}, {Channel::Y, 0},
                                                  {Channel::Y, 1}, {Channel::Z, 0}, {Channel::Z, 1}};
  for (size_t j = 0; j < want.size(); ++j) {
    CHECK(s.pulses[j].channel == want[j].first);
    CHECK(s.pulses[j].index == want[j].second);
  }
  // shorter arcs: 0.5 -> 0 goes down, 4.0 -> 0 goes up through 2 pi
  CHECK(s.pulses[0].sign == -1);
  CHECK(s.pulses[1].sign == +1);
  CHECK(s.pulses[2].sign == -1);
  CHECK(s.pulses[3].sign == +1);
  CHECK(s.pulses[4].sign == +1);
  CHECK(s.pulses[5].sign == +1);
  CHECK(s.pulses[6].sign == -1);
  CHECK(area(s.pulses[1]) == doctest::Approx((2 * pi - 4.0) / 2));
  for (size_t j = 0; j < s.pulses.size(); ++j) {
    CHECK(s.pulses[j].t0 == s.boundaries[j]);
    CHECK(s.pulses[j].t1 == s.boundaries[j + 1]);
  }
  CHECK(fidelity(propagate_exact(s, to_amplitudes(a)), to_amplitudes(b)) >= 1 - 1e-12);
}

TEST_CASE("phase exactly pi") {
  const GeometricState a(angles({1.0}), angles({pi}));
  const GeometricState b(angles({2.0}), angles({pi}));
  const auto s = synthesize({2, a, b, WaveformFamily::local_sine(), {0.7}});
  CHECK(s.pulses.size() == 3);
  CHECK(s.pulses.front().sign == +1);
  CHECK(fidelity(propagate_exact(s, to_amplitudes(a)), to_amplitudes(b)) >= 1 - 1e-12);
}

TEST_CASE("random transitions reach their targets") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const auto a = testing::random_state(rng, n);
    const auto b = testing::random_state(rng, n);
    const auto ga = to_geometric(a);
    const auto gb = to_geometric(b);
    for (const auto& f : families()) {
      const auto s = synthesize({n, ga, gb, f, {0.9}});
      CHECK(static_cast<int>(s.pulses.size()) == slot_count(n));
      CHECK(fidelity(propagate_exact(s, a), b) >= 1 - 1e-8);
      const auto [c1, c2] = c_constants(ga, gb);
      CHECK(std::abs(total_area(s) - (c1 + c2) / 2) < 1e-10);
    }
  }
}

TEST_CASE("random N=4 transition through the RK4 oracle") {
  std::mt19937_64 rng(4);
  const auto a = testing::random_state(rng, 4);
  const auto b = testing::random_state(rng, 4);
  const auto s = synthesize({4, to_geometric(a), to_geometric(b), WaveformFamily::local_sine(), {1.0}});
  CHECK(s.pulses.size() <= 11u);
  NumericOptions opt{transition_time(s), 2000};
  const auto traj = propagate_numeric(schedule_to_field(s), a, transition_time(s), opt);
  CHECK(fidelity(traj.final_state(), b) >= 1 - 1e-8);
}

TEST_CASE("family equivalence and duration scaling") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const auto a = testing::random_state(rng, n);
    const auto ga = to_geometric(a);
    const auto gb = testing::random_geometric(rng, n);
    std::vector<PureState> finals;
    for (const auto& f : families()) {
      const auto s1 = synthesize({n, ga, gb, f, {1.3}});
      const auto s2 = synthesize({n, ga, gb, f, {2.6}});
      CHECK(transition_time(s2) == doctest::Approx(transition_time(s1) / 2).epsilon(1e-15));
      finals.push_back(propagate_exact(s1, a));
    }
    for (size_t i = 1; i < finals.size(); ++i) CHECK(fidelity(finals[0], finals[i]) >= 1 - 1e-8);
  }
}

TEST_CASE("per-slot amplitudes") {
  std::mt19937_64 rng(17);
  const int n = 3;
  const auto a = testing::random_state(rng, n);
  const auto b = testing::random_state(rng, n);
  std::vector<double> amps{0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5};
  const auto s = synthesize({n, to_geometric(a), to_geometric(b), WaveformFamily::local_poly(2), amps});
  REQUIRE(s.pulses.size() == 7);
  for (size_t j = 0; j < amps.size(); ++j) CHECK(s.pulses[j].amplitude == amps[j]);
  CHECK(fidelity(propagate_exact(s, a), b) >= 1 - 1e-10);
}

TEST_CASE("C constants") {
  auto [c1, c2] = c_constants(qubit_initial, qubit_target);
  CHECK(c1 == doctest::Approx(pi / 2));
  CHECK(c2 == doctest::Approx(pi / 2));

  const GeometricState flat(angles({0.4, 0.9}), angles({0, 0}));
  std::tie(c1, c2) = c_constants(flat, flat);
  CHECK(c1 == doctest::Approx(1.8));  // the theta_2 leg is undone and redone
  CHECK(c2 == 0.0);
  const GeometricState zero(angles({0, 0}), angles({0, 0}));
  std::tie(c1, c2) = c_constants(zero, zero);
  CHECK(c1 == 0.0);
  CHECK(c2 == 0.0);

  std::tie(c1, c2) = c_constants(GeometricState(angles({pi / 2, pi / 2}), angles({0, 0})), zero);
  CHECK(c1 == doctest::Approx(pi));
  CHECK(c2 == 0.0);

  CHECK_THROWS_AS(c_constants(qubit_initial, zero), InvalidInput);
}

TEST_CASE("transition time") {
  CHECK(transition_time(Schedule{}) == 0.0);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const auto ga = testing::random_geometric(rng, n);
    const auto gb = testing::random_geometric(rng, n);
    const auto s = synthesize({n, ga, gb, WaveformFamily::local_sine(), {1.7}});
    const auto [c1, c2] = c_constants(ga, gb);
    CHECK(transition_time(s) == doctest::Approx(pi / 4 * (c1 + c2) / 1.7).epsilon(1e-12));
    double sum = 0.0;
    for (const auto& p : s.pulses) sum += p.duration();
    CHECK(transition_time(s) == doctest::Approx(sum).epsilon(1e-13));
  }
}

TEST_CASE("synthesize validation") {
  const GeometricState three(angles({0, 0}), angles({0, 0}));
  CHECK_THROWS_AS(synthesize({2, qubit_initial, qubit_target, WaveformFamily::local_sine(), {0.0}}), InvalidInput);
  CHECK_THROWS_AS(synthesize({2, qubit_initial, qubit_target, WaveformFamily::local_sine(), {-1.0}}), InvalidInput);
  CHECK_THROWS_AS(synthesize({2, qubit_initial, qubit_target, WaveformFamily::local_sine(), {}}), InvalidInput);
  CHECK_THROWS_AS(synthesize({2, qubit_initial, three, WaveformFamily::local_sine(), {1.0}}), InvalidInput);
  CHECK_THROWS_AS(synthesize({3, qubit_initial, qubit_target, WaveformFamily::local_sine(), {1.0}}), InvalidInput);
}
