#pragma once

#include <optional>
#include <vector>

#include "contactwell/numerics.hpp"
#include "contactwell/transcend.hpp"

namespace contactwell {

// Acceptance bounds every returned pair must meet.
inline constexpr double kResidualBound = 1e-10;
inline constexpr double kImaginaryBound = 1e-9;
// Perturbative seeds are used directly only for |U| up to this value.
inline constexpr double kPerturbativeTrustRadius = 2.0;
// Largest U increment used when continuing beyond the trust radius.
inline constexpr double kContinuationStep = 0.05;

struct SolveRequest {
  double U = 0.0;
  StateLabel label{1, 1};
  std::optional<NewtonConfig> newton;
  std::optional<int> n_max;
};

// Newton settings used when a request carries no override.
NewtonConfig default_solver_newton();

// Dispatches on the label: n = m runs complex Newton (s = +1) from the
// perturbative guess, continuing from |U| = 2 beyond the trust radius; n != m
// goes through the CI-seeded reduced solve. U = 0 returns (n pi, m pi).
// The pair is ordered k1 > k2 when real and Im k1 > 0 when complex.
// Throws SolutionRejected if the result violates the pair invariants.
Solution solve_state(const SolveRequest& req);

// Orders a raw root, verifies it and checks the reality and conjugacy
// invariants for its label. Throws SolutionRejected on violation.
Solution finalize_pair(const Eigen::Vector2cd& k, const TranscendentalCase& eq, const StateLabel& label,
                       int iterations);

struct SweepPoint {
  double U = 0.0;
  std::optional<Solution> solution;  // empty marks a gap

  double energy() const { return solution ? solution->pair.energy().real() : 0.0; }
};

struct SweepResult {
  StateLabel label{1, 1};
  std::vector<SweepPoint> points;  // in grid order from U_start to U_end
};

struct SweepOptions {
  std::optional<NewtonConfig> newton;
  std::optional<int> n_max;
};

// Natural continuation over a uniform grid of `steps` values. Marches outward
// from the grid point nearest U = 0, seeding each Newton solve with a secant
// prediction from the previous points. A failed step is recorded as a gap and
// the march resumes from a fresh solve.
SweepResult sweep(const StateLabel& label, double U_start, double U_end, int steps,
                  const SweepOptions& opts = {});

}  // namespace contactwell
