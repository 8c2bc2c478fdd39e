#pragma once

// Pure states of an N-level system and their 2(N-1) angle parametrization
//
//   c_0     = cos(t_1/2)
//   c_k     = e^{i p_k} cos(t_{k+1}/2) prod_{j<=k} sin(t_j/2),   1 <= k <= N-2
//   c_{N-1} = e^{i p_{N-1}} prod_{j<=N-1} sin(t_j/2)
//
// with t_j in [0, pi] and p_j in [0, 2 pi). The global phase is fixed by
// making the first nonzero amplitude real and positive.

#include <algorithm>
#include <cmath>
#include <string>

#include "pulsesynth/types.hpp"

namespace pulsesynth {

/// Norm tolerance accepted when wrapping an existing amplitude vector.
inline constexpr double kNormTolerance = 1e-9;
/// Amplitudes below this magnitude are treated as zero during angle extraction.
inline constexpr double kZeroAmplitude = 1e-12;

template <typename Real>
class BasicPureState {
 public:
  using Vector = CVector<Real>;

  /// Wraps an already normalized vector; rejects anything further than
  /// `tolerance` from unit norm.
  explicit BasicPureState(Vector amplitudes, Real tolerance = Real(kNormTolerance))
      : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 2) {
      throw InvalidInput("pure state needs dim >= 2, got " + std::to_string(amplitudes_.size()));
    }
    if (!amplitudes_.allFinite()) throw InvalidInput("pure state has non-finite amplitudes");
    const Real norm = amplitudes_.norm();
    if (std::abs(norm - Real(1)) > tolerance) {
      throw InvalidInput("pure state is not normalized (||c|| - 1 = " + std::to_string(double(norm - Real(1))) + ")");
    }
  }

  /// Scales an arbitrary nonzero vector to unit norm.
  static BasicPureState normalized(const Vector& v) {
    if (v.size() < 2) throw InvalidInput("pure state needs dim >= 2");
    if (!v.allFinite()) throw InvalidInput("pure state has non-finite amplitudes");
    const Real n = v.norm();
    if (!(n > Real(kZeroAmplitude))) throw InvalidInput("cannot normalize a zero-norm vector");
    return BasicPureState(Vector(v / n));
  }

  /// Computational basis state |level>.
  static BasicPureState basis(int dim, int level) {
    if (dim < 2 || level < 0 || level >= dim) throw InvalidInput("basis state index out of range");
    Vector v = Vector::Zero(dim);
    v(level) = Real(1);
    return BasicPureState(std::move(v));
  }

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  std::complex<Real> operator[](int n) const { return amplitudes_(n); }

 private:
  Vector amplitudes_;
};

using PureState = BasicPureState<double>;

template <typename Real>
class BasicGeometricState {
 public:
  using Angles = RVector<Real>;

  BasicGeometricState(Angles theta, Angles phi) : theta_(std::move(theta)), phi_(std::move(phi)) {
    if (theta_.size() < 1) throw InvalidInput("geometric state needs at least one theta (dim >= 2)");
    if (theta_.size() != phi_.size()) {
      throw InvalidInput("theta and phi lengths differ (" + std::to_string(theta_.size()) + " vs " +
                         std::to_string(phi_.size()) + ")");
    }
    for (Eigen::Index j = 0; j < theta_.size(); ++j) {
      if (!(theta_(j) >= Real(0) && theta_(j) <= kPi<Real>)) {
        throw InvalidInput("theta[" + std::to_string(j) + "] outside [0, pi]");
      }
      if (!(phi_(j) >= Real(0) && phi_(j) < 2 * kPi<Real>)) {
        throw InvalidInput("phi[" + std::to_string(j) + "] outside [0, 2pi)");
      }
    }
  }

  /// Checks the angle vectors against an expected dimension.
  BasicGeometricState(int dim, Angles theta, Angles phi) : BasicGeometricState(std::move(theta), std::move(phi)) {
    if (this->dim() != dim) {
      throw InvalidInput("angle vectors have length " + std::to_string(theta_.size()) + ", expected dim-1 = " +
                         std::to_string(dim - 1));
    }
  }

  int dim() const { return static_cast<int>(theta_.size()) + 1; }
  const Angles& theta() const { return theta_; }
  const Angles& phi() const { return phi_; }

 private:
  Angles theta_;
  Angles phi_;
};

using GeometricState = BasicGeometricState<double>;

template <typename Real>
BasicPureState<Real> to_amplitudes(const BasicGeometricState<Real>& geo) {
  const int n = geo.dim();
  CVector<Real> c(n);
  Real sines = Real(1);
  for (int k = 0; k < n - 1; ++k) {
    const Real half = geo.theta()(k) / 2;
    const std::complex<Real> phase = k == 0 ? std::complex<Real>(1) : std::polar(Real(1), geo.phi()(k - 1));
    c(k) = phase * (sines * std::cos(half));
    sines *= std::sin(half);
  }
  c(n - 1) = std::polar(Real(1), geo.phi()(n - 2)) * sines;
  return BasicPureState<Real>(std::move(c));
}

namespace detail {

template <typename Real>
Real wrap_phase(Real angle) {
  const Real two_pi = 2 * kPi<Real>;
  Real a = std::fmod(angle, two_pi);
  if (a < 0) a += two_pi;
  if (a >= two_pi) a = 0;
  return a;
}

}  // namespace detail

template <typename Real>
BasicGeometricState<Real> to_geometric(const BasicPureState<Real>& state) {
  const int n = state.dim();
  const auto& raw = state.amplitudes();
  const Real norm = raw.norm();
  if (!(norm > Real(kZeroAmplitude))) throw InvalidInput("cannot parametrize a zero-norm state");

  CVector<Real> c = raw / norm;
  for (int k = 0; k < n; ++k) {
    if (std::abs(c(k)) >= Real(kZeroAmplitude)) {
      c *= std::polar(Real(1), -std::arg(c(k)));
      break;
    }
  }

  // tail(k) = sqrt(sum_{m >= k} |c_m|^2)
  RVector<Real> tail(n + 1);
  tail(n) = 0;
  for (int k = n - 1; k >= 0; --k) tail(k) = std::hypot(tail(k + 1), std::abs(c(k)));

  RVector<Real> theta(n - 1), phi(n - 1);
  for (int k = 1; k < n; ++k) {
    const Real head = std::abs(c(k - 1));
    const Real rest = tail(k);
    theta(k - 1) = (head < Real(kZeroAmplitude) && rest < Real(kZeroAmplitude)) ? Real(0) : 2 * std::atan2(rest, head);
    if (theta(k - 1) > kPi<Real>) theta(k - 1) = kPi<Real>;
    phi(k - 1) = std::abs(c(k)) < Real(kZeroAmplitude) ? Real(0) : detail::wrap_phase(std::arg(c(k)));
  }
  return BasicGeometricState<Real>(std::move(theta), std::move(phi));
}

/// |<a|b>|^2
template <typename Real>
Real fidelity(const BasicPureState<Real>& a, const BasicPureState<Real>& b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("fidelity: dimension mismatch (" + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                       ")");
  }
  return std::min(Real(1), std::norm(a.amplitudes().dot(b.amplitudes())));
}

}  // namespace pulsesynth
