#include "contactwell/transcend.hpp"

#include <algorithm>

namespace contactwell {

namespace {

constexpr double kSineFloor = 1e-8;
constexpr double kRootResidual = 1e-8;
// Applied to roots at the acceptance level only; looser roots are not
// resolved well enough for the quotient form to be meaningful.
constexpr double kAcceptedResidual = 1e-10;
constexpr double kQuotientTolerance = 1e-6;

}  // namespace

Eigen::Vector2cd quotient_residual(const TranscendentalCase& c, const Eigen::Vector2cd& k) {
  const cdouble k1 = k(0), k2 = k(1);
  const cdouble s1 = std::sin(k1), s2 = std::sin(k2);
  const cdouble cot1 = std::cos(k1) / s1, cot2 = std::cos(k2) / s2;
  return {k1 * s2 / (k2 * s1) + static_cast<double>(c.s), 2.0 * (k1 * cot1 + k2 * cot2) + c.U};
}

double verify_solution(const MomentumPair& pair) {
  pair.equation.validate();
  const Eigen::Vector2cd k = pair.values();
  if (!k.allFinite()) throw SolutionRejected("verify_solution: momenta are not finite");

  const double r = residual<cdouble>(pair.equation, k).lpNorm<Eigen::Infinity>();
  const bool is_root = r <= kRootResidual;

  if (std::abs(pair.k1) < kSineFloor || std::abs(pair.k2) < kSineFloor) {
    if (is_root) throw SolutionRejected("verify_solution: zero momentum gives a vanishing wavefunction");
    return r;
  }

  const double sin1 = std::abs(std::sin(pair.k1));
  const double sin2 = std::abs(std::sin(pair.k2));
  if (sin1 < kSineFloor || sin2 < kSineFloor) {
    // Both sines vanish: a root of the regularized system for every U, but a
    // genuine solution only without interaction.
    if (is_root && !(sin1 < kSineFloor && sin2 < kSineFloor && pair.equation.U == 0.0))
      throw SolutionRejected("verify_solution: root sits on a zero of sin k; regularization artefact");
    return r;
  }

  if (r <= kAcceptedResidual) {
    // Near the zero set of the sines the regularized residual is tiny for
    // any U; the quotient form is not, and stays O(1) there.
    const double q = quotient_residual(pair.equation, k).lpNorm<Eigen::Infinity>();
    if (!(q <= kQuotientTolerance * (1.0 + std::abs(pair.equation.U))))
      throw SolutionRejected("verify_solution: quotient form disagrees with the regularized residual");
  }
  return r;
}

}  // namespace contactwell
