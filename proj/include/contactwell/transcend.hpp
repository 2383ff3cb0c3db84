#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>

#include "contactwell/errors.hpp"

namespace contactwell {

using cdouble = std::complex<double>;

enum class ParityClass { same, different };

// Quantum numbers of the non-interacting parent state (k1 ~ n*pi, k2 ~ m*pi).
class StateLabel {
 public:
  StateLabel(int n, int m) : n_(n), m_(m) {
    if (n < 1 || m < 1) throw InvalidLabel("state label needs n, m >= 1");
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  ParityClass parity_class() const noexcept {
    return (n_ - m_) % 2 == 0 ? ParityClass::same : ParityClass::different;
  }
  bool identical() const noexcept { return n_ == m_; }
  // The same unordered pair with the larger quantum number first.
  StateLabel canonical() const noexcept { return n_ >= m_ ? *this : StateLabel(m_, n_); }
  // Unordered comparison; (2,1) and (1,2) name the same singlet.
  bool same_state(const StateLabel& other) const noexcept {
    return canonical() == other.canonical();
  }

  friend bool operator==(const StateLabel&, const StateLabel&) = default;

 private:
  int n_;
  int m_;
};

// Interaction strength U and the amplitude ratio sign s = N/M. s = +1 selects
// the system satisfied by same-parity states, s = -1 the mixed-parity one.
struct TranscendentalCase {
  double U = 0.0;
  int s = 1;

  void validate() const {
    if (s != 1 && s != -1) throw UsageError("TranscendentalCase: s must be +1 or -1");
    if (!std::isfinite(U)) throw UsageError("TranscendentalCase: U must be finite");
  }

  static TranscendentalCase for_label(double U, const StateLabel& label) {
    return {U, label.parity_class() == ParityClass::same ? 1 : -1};
  }
};

struct MomentumPair {
  cdouble k1;
  cdouble k2;
  TranscendentalCase equation;
  StateLabel label{1, 1};

  Eigen::Vector2cd values() const { return {k1, k2}; }
  // Scaled energy k1^2 + k2^2, in units of hbar^2 / (2 m L^2).
  cdouble energy() const { return k1 * k1 + k2 * k2; }
};

// A verified pair together with how it was obtained.
struct Solution {
  MomentumPair pair;
  double residual_norm = 0.0;
  int iterations = 0;
};

// Regularized residual (f1, f2):
//   f1 = k1 sin k2 + s k2 sin k1
//   f2 = 2 [k1 cos k1 sin k2 + k2 cos k2 sin k1] + U sin k1 sin k2
// i.e. the quotient and cotangent conditions multiplied through by their
// denominators, so both components are entire in (k1, k2).
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> residual(const TranscendentalCase& c, const Eigen::Matrix<Scalar, 2, 1>& k) {
  using std::cos;
  using std::sin;
  const Scalar k1 = k(0), k2 = k(1);
  const Scalar s1 = sin(k1), c1 = cos(k1), s2 = sin(k2), c2 = cos(k2);
  const double s = c.s;
  return {k1 * s2 + s * k2 * s1, 2.0 * (k1 * c1 * s2 + k2 * c2 * s1) + c.U * s1 * s2};
}

template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> jacobian(const TranscendentalCase& c, const Eigen::Matrix<Scalar, 2, 1>& k) {
  using std::cos;
  using std::sin;
  const Scalar k1 = k(0), k2 = k(1);
  const Scalar s1 = sin(k1), c1 = cos(k1), s2 = sin(k2), c2 = cos(k2);
  const double s = c.s;
  Eigen::Matrix<Scalar, 2, 2> j;
  j(0, 0) = s2 + s * k2 * c1;
  j(0, 1) = k1 * c2 + s * s1;
  j(1, 0) = 2.0 * (c1 * s2 - k1 * s1 * s2 + k2 * c2 * c1) + c.U * c1 * s2;
  j(1, 1) = 2.0 * (k1 * c1 * c2 + c2 * s1 - k2 * s2 * s1) + c.U * s1 * c2;
  return j;
}

// The original quotient/cotangent form:
//   q1 = k1 sin k2 / (k2 sin k1) + s,  q2 = 2 (k1 cot k1 + k2 cot k2) + U.
// Only meaningful away from zeros of sin k1, sin k2 and k2.
Eigen::Vector2cd quotient_residual(const TranscendentalCase& c, const Eigen::Vector2cd& k);

// Returns the infinity norm of the regularized residual at the pair.
// Throws SolutionRejected when the pair is a regularization artefact: a zero
// momentum, or sin k1 = sin k2 = 0 with U != 0. Away from the zeros of the
// sines, a small regularized residual must be matched by a small quotient
// residual or the pair is likewise rejected.
double verify_solution(const MomentumPair& pair);

}  // namespace contactwell
