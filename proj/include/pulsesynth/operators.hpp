#pragma once

// Generalized Pauli operators on the adjacent levels (k, k+1) of an N-level
// system, and the exponentials e^{-i dF H} for H = z_{N,k}, y_{N,k}.

#include <cmath>
#include <string>

#include "pulsesynth/types.hpp"

namespace pulsesynth {

enum class OperatorKind { X, Y, Z, Isub };

struct OperatorSpec {
  OperatorKind kind;
  int dim;
  int index;
};

namespace detail {

inline void check_operator_index(int dim, int index) {
  if (dim < 2) throw InvalidInput("operator dimension must be >= 2, got " + std::to_string(dim));
  if (index < 0 || index > dim - 2) {
    throw InvalidInput("operator index " + std::to_string(index) + " outside [0, " + std::to_string(dim - 2) + "]");
  }
}

}  // namespace detail

template <typename Real = double>
CMatrix<Real> build(const OperatorSpec& op) {
  detail::check_operator_index(op.dim, op.index);
  using C = std::complex<Real>;
  const int k = op.index;
  CMatrix<Real> m = CMatrix<Real>::Zero(op.dim, op.dim);
  switch (op.kind) {
    case OperatorKind::X:
      m(k, k + 1) = C(1);
      m(k + 1, k) = C(1);
      break;
    case OperatorKind::Y:
      m(k + 1, k) = C(0, 1);
      m(k, k + 1) = C(0, -1);
      break;
    case OperatorKind::Z:
      m.setIdentity();
      m(k + 1, k + 1) = C(-1);
      break;
    case OperatorKind::Isub:
      m(k, k) = C(1);
      m(k + 1, k + 1) = C(1);
      break;
  }
  return m;
}

/// e^{-i dF z_{N,k}} = e^{-i dF} (I + (e^{2 i dF} - 1) |k+1><k+1|)
template <typename Real>
CMatrix<Real> expm_z(Real delta_f, int dim, int index) {
  detail::check_operator_index(dim, index);
  CMatrix<Real> u = CMatrix<Real>::Identity(dim, dim);
  u(index + 1, index + 1) += std::polar(Real(1), 2 * delta_f) - Real(1);
  return std::polar(Real(1), -delta_f) * u;
}

/// e^{-i dF y_{N,k}} = I_{N,k} cos dF - i y_{N,k} sin dF + (I_N - I_{N,k})
template <typename Real>
CMatrix<Real> expm_y(Real delta_f, int dim, int index) {
  detail::check_operator_index(dim, index);
  const Real c = std::cos(delta_f);
  const Real s = std::sin(delta_f);
  CMatrix<Real> u = CMatrix<Real>::Identity(dim, dim);
  u(index, index) = c;
  u(index + 1, index + 1) = c;
  // -i * y = -i * i (|k+1><k| - |k><k+1|)
  u(index + 1, index) = s;
  u(index, index + 1) = -s;
  return u;
}

/// General-purpose matrix exponential by scaling and squaring around a
/// truncated Taylor series. Shares nothing with the closed forms above.
template <typename Derived>
typename Derived::PlainObject expm_oracle(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  using RealScalar = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (m.rows() != m.cols()) throw InvalidInput("expm_oracle: matrix is not square");

  const RealScalar norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > RealScalar(0.5)) squarings = static_cast<int>(std::ceil(std::log2(norm / RealScalar(0.5))));
  const Plain a = m / std::ldexp(RealScalar(1), squarings);

  const Plain identity = Plain::Identity(m.rows(), m.cols());
  Plain sum = identity;
  Plain term = identity;
  for (int j = 1; j < 64; ++j) {
    term = (term * a) / RealScalar(j);
    sum += term;
    if (term.cwiseAbs().colwise().sum().maxCoeff() < RealScalar(1e-16)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace pulsesynth
