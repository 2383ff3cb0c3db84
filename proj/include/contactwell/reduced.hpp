#pragma once

#include <Eigen/Core>

#include <optional>

#include "contactwell/cimethod.hpp"
#include "contactwell/numerics.hpp"
#include "contactwell/transcend.hpp"

namespace contactwell {

// Energy-constrained parameterization of a momentum pair:
//   k1 = Omega sin(theta) + i rho cos(theta)
//   k2 = Omega cos(theta) - i rho sin(theta),  Omega = sqrt(E + rho^2)
// so that k1^2 + k2^2 = E for every real (E, rho, theta).
struct ReducedParams {
  double E_tilde = 0.0;
  double rho = 0.0;
  double theta = 0.0;

  double omega() const;
};

// Throws InvalidReduction when E + rho^2 < 0 or rho < 0.
Eigen::Vector2cd params_to_momenta(const ReducedParams& p);

struct StageAResult {
  ReducedParams params;
  double initial_objective = 0.0;  // |residual|_2^2 at the seed
  double final_objective = 0.0;
  int iterations = 0;
};

// Gauss-Newton on (rho, theta) at fixed E, minimizing |residual|_2^2. Seeded
// at rho = 0 with theta placing k1 near n pi and k2 near m pi. Throws
// ReductionFailed if the objective cannot be reduced or goes non-finite.
StageAResult minimize_at_fixed_energy(const TranscendentalCase& equation, const StateLabel& label,
                                      double E_tilde);

struct NonidenticalOptions {
  int n_max = kDefaultBasisCutoff;
  NewtonConfig newton{};
  // Overrides the CI energy used to fix E in the first stage.
  std::optional<double> energy_seed;
};

// Two-stage solve for n != m: fixed-energy Gauss-Newton from the CI energy,
// then unconstrained real Newton on (k1, k2). The result is real, ordered
// k1 > k2, and has regularized residual <= 1e-10.
Solution solve_nonidentical(double U, const StateLabel& label, const NonidenticalOptions& opts = {});

}  // namespace contactwell
