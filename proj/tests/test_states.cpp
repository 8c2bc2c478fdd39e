#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pulsesynth/states.hpp"

using namespace pulsesynth;
using Angles = RVector<double>;

namespace {

constexpr double pi = kPi<double>;
const double r2 = std::sqrt(2.0) / 2;

Angles angles(std::initializer_list<double> v) {
  Angles a(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) a(i++) = x;
  return a;
}

PureState state(std::initializer_list<std::complex<double>> v) {
  VectorXcd c(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto x : v) c(i++) = x;
  return PureState(c);
}

}  // namespace

TEST_CASE("to_amplitudes reproduces the angle formula") {
  SUBCASE("basis state") {
    const auto c = to_amplitudes(GeometricState(angles({0}), angles({0})));
    CHECK(std::abs(c[0] - 1.0) < 1e-15);
    CHECK(std::abs(c[1]) < 1e-15);
  }
  SUBCASE("equatorial qubit with phase pi/2") {
    const auto c = to_amplitudes(GeometricState(angles({pi / 2}), angles({pi / 2})));
    CHECK(std::abs(c[0] - r2) < 1e-15);
    CHECK(std::abs(c[1] - std::complex<double>(0, r2)) < 1e-15);
  }
  SUBCASE("qutrit with theta = (pi, pi/2)") {
    const auto c = to_amplitudes(GeometricState(angles({pi, pi / 2}), angles({0, 0})));
    CHECK(std::abs(c[0]) < 1e-15);
    CHECK(std::abs(c[1] - r2) < 1e-15);
    CHECK(std::abs(c[2] - r2) < 1e-15);
  }
}

TEST_CASE("geometric state validation") {
  CHECK_THROWS_AS(GeometricState(angles({0, 0}), angles({0})), InvalidInput);
  CHECK_THROWS_AS(GeometricState(3, angles({0}), angles({0})), InvalidInput);
  CHECK_THROWS_AS(GeometricState(angles({-0.1}), angles({0})), InvalidInput);
  CHECK_THROWS_AS(GeometricState(angles({pi + 1e-9}), angles({0})), InvalidInput);
  CHECK_THROWS_AS(GeometricState(angles({0}), angles({2 * pi})), InvalidInput);
  CHECK_NOTHROW(GeometricState(2, angles({pi}), angles({0})));
}

TEST_CASE("pure state validation") {
  CHECK_THROWS_AS(PureState(VectorXcd::Zero(2)), InvalidInput);
  CHECK_THROWS_AS(PureState::normalized(VectorXcd::Zero(3)), InvalidInput);
  CHECK_THROWS_AS(PureState::basis(1, 0), InvalidInput);
  VectorXcd v(2);
  v << 3.0, std::complex<double>(0, 4.0);
  const auto s = PureState::normalized(v);
  CHECK(std::abs(s.amplitudes().norm() - 1.0) < 1e-15);
}

TEST_CASE("to_geometric examples") {
  SUBCASE("basis state gives zero angles") {
    const auto g = to_geometric(PureState::basis(3, 0));
    CHECK(g.theta().isZero(0));
    CHECK(g.phi().isZero(0));
  }
  SUBCASE("worked-example target") {
    const auto g = to_geometric(state({r2, {0, r2}}));
    CHECK(g.theta()(0) == doctest::Approx(pi / 2).epsilon(1e-14));
    CHECK(g.phi()(0) == doctest::Approx(pi / 2).epsilon(1e-14));
  }
  SUBCASE("global phase is removed") {
    const std::complex<double> phase = std::polar(1.0, 2.1);
    const auto g = to_geometric(state({phase * r2, phase * std::complex<double>(0, r2)}));
    CHECK(g.phi()(0) == doctest::Approx(pi / 2).epsilon(1e-14));
  }
  SUBCASE("vanishing c_0 makes the first nonzero amplitude real") {
    const auto g = to_geometric(state({0.0, {0, 1}, 0.0}));
    CHECK(g.theta()(0) == doctest::Approx(pi));
    CHECK(g.theta()(1) == 0.0);
    CHECK(std::abs(g.phi()(0)) < 1e-15);
    CHECK(g.phi()(1) == 0.0);
  }
  SUBCASE("undefined trailing angles are zero") {
    const auto g = to_geometric(PureState::basis(4, 1));
    CHECK(g.theta()(0) == doctest::Approx(pi));
    CHECK(g.theta()(1) == 0.0);
    CHECK(g.theta()(2) == 0.0);
    CHECK(g.phi().isZero(0));
  }
}

TEST_CASE("parametrization round trip, ranges and norm") {
  std::mt19937_64 rng(20240901);
  std::uniform_int_distribution<int> dim(2, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = dim(rng);
    const auto v = testing::random_state(rng, n);
    const auto g = to_geometric(v);
    REQUIRE(g.dim() == n);
    CHECK((g.theta().array() >= 0).all());
    CHECK((g.theta().array() <= pi).all());
    CHECK((g.phi().array() >= 0).all());
    CHECK((g.phi().array() < 2 * pi).all());
    const auto back = to_amplitudes(g);
    CHECK(std::abs(back.amplitudes().norm() - 1.0) < 1e-12);
    CHECK(fidelity(back, v) >= 1 - 1e-10);
  }
}

TEST_CASE("fidelity") {
  const auto zero = PureState::basis(2, 0);
  const auto one = PureState::basis(2, 1);
  CHECK(fidelity(zero, zero) == doctest::Approx(1.0));
  CHECK(fidelity(zero, one) == 0.0);
  const auto plus = state({r2, r2});
  const auto plus_i = state({r2, {0, r2}});
  CHECK(fidelity(plus, plus_i) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(fidelity(plus_i, plus) == doctest::Approx(fidelity(plus, plus_i)));
  CHECK_THROWS_AS(fidelity(zero, PureState::basis(3, 0)), InvalidInput);

  const auto shifted = PureState(std::polar(1.0, 0.7) * plus_i.amplitudes());
  CHECK(fidelity(shifted, plus_i) == doctest::Approx(1.0).epsilon(1e-15));
}
