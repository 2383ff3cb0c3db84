#include "contactwell/perturb.hpp"

#include <cmath>
#include <numbers>

namespace contactwell {

double shift_radicand(int n, double U) {
  if (n < 1) throw InvalidLabel("shift_radicand: n must be >= 1");
  const double denom = 2.0 + U / 2.0;
  if (denom == 0.0) throw DegenerateDenominator("perturbative shifts are undefined at U = -4");
  const double npi = n * std::numbers::pi;
  const double half = U / (2.0 * npi);
  return half * half + (U - U * U * U / (6.0 * npi * npi)) / denom;
}

std::pair<PerturbativeShift, PerturbativeShift> shifts(int n, double U) {
  const double r = shift_radicand(n, U);
  const cdouble root = r >= 0.0 ? cdouble(std::sqrt(r), 0.0) : cdouble(0.0, std::sqrt(-r));
  const cdouble centre(U / (2.0 * n * std::numbers::pi), 0.0);
  return {PerturbativeShift{centre + root, centre - root, n, U, Branch::plus},
          PerturbativeShift{centre - root, centre + root, n, U, Branch::minus}};
}

Eigen::Vector2cd initial_guess(const StateLabel& label, double U) {
  if (!label.identical())
    throw WrongSolvePath("perturbative guesses only exist for identical quantum numbers n = m");
  const auto plus = shifts(label.n(), U).first;
  const double npi = label.n() * std::numbers::pi;
  return {npi + plus.delta_x, npi + plus.delta_y};
}

}  // namespace contactwell
