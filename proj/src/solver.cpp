#include "contactwell/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "contactwell/perturb.hpp"
#include "contactwell/reduced.hpp"

namespace contactwell {

NewtonConfig default_solver_newton() {
  NewtonConfig cfg;
  cfg.residual_tolerance = 1e-11;
  return cfg;
}

namespace {

NewtonReport<cdouble> complex_newton(const TranscendentalCase& eq, const Eigen::Vector2cd& x0,
                                     const NewtonConfig& cfg) {
  return newton_solve<cdouble>(
      [&](const Eigen::VectorXcd& k) -> Eigen::VectorXcd {
        return residual<cdouble>(eq, Eigen::Vector2cd(k(0), k(1)));
      },
      [&](const Eigen::VectorXcd& k) -> Eigen::MatrixXcd {
        return jacobian<cdouble>(eq, Eigen::Vector2cd(k(0), k(1)));
      },
      Eigen::VectorXcd(x0), cfg);
}

Solution non_interacting(const StateLabel& label) {
  const StateLabel c = label.canonical();
  const MomentumPair pair{cdouble(c.n() * std::numbers::pi, 0.0), cdouble(c.m() * std::numbers::pi, 0.0),
                          TranscendentalCase::for_label(0.0, label), label};
  return {pair, verify_solution(pair), 0};
}

Solution solve_identical(double U, const StateLabel& label, const NewtonConfig& cfg) {
  const TranscendentalCase eq = TranscendentalCase::for_label(U, label);
  if (std::abs(U) <= kPerturbativeTrustRadius) {
    const auto report = complex_newton(eq, initial_guess(label, U), cfg);
    return finalize_pair(report.solution, eq, label, report.iterations);
  }

  // Continue outward from the edge of the trust region.
  const double u0 = std::copysign(kPerturbativeTrustRadius, U);
  const int steps = static_cast<int>(std::ceil((std::abs(U) - kPerturbativeTrustRadius) / kContinuationStep));
  const double du = (U - u0) / steps;

  Solution current = solve_identical(u0, label, cfg);
  Eigen::Vector2cd prev = current.pair.values();
  Eigen::Vector2cd last = prev;
  int total_iterations = current.iterations;
  for (int i = 1; i <= steps; ++i) {
    const double u = (i == steps) ? U : u0 + i * du;
    const TranscendentalCase step_eq = TranscendentalCase::for_label(u, label);
    const Eigen::Vector2cd predictor = (i == 1) ? last : Eigen::Vector2cd(2.0 * last - prev);
    const auto report = complex_newton(step_eq, predictor, cfg);
    current = finalize_pair(report.solution, step_eq, label, 0);
    total_iterations += report.iterations;
    prev = last;
    last = current.pair.values();
  }
  current.iterations = total_iterations;
  return current;
}

}  // namespace

Solution finalize_pair(const Eigen::Vector2cd& k, const TranscendentalCase& eq, const StateLabel& label,
                       int iterations) {
  cdouble k1 = k(0), k2 = k(1);
  const double scale = std::max({1.0, std::abs(k1), std::abs(k2)});
  const bool complex_pair = std::abs(k1.imag()) > kImaginaryBound * scale ||
                            std::abs(k2.imag()) > kImaginaryBound * scale;
  if (complex_pair ? (k1.imag() < k2.imag()) : (k1.real() < k2.real())) std::swap(k1, k2);

  Solution sol{MomentumPair{k1, k2, eq, label}, 0.0, iterations};
  sol.residual_norm = verify_solution(sol.pair);
  if (!(sol.residual_norm <= kResidualBound))
    throw SolutionRejected("residual " + std::to_string(sol.residual_norm) + " exceeds the acceptance bound");
  if (!(std::abs(sol.pair.energy().imag()) <= kImaginaryBound))
    throw SolutionRejected("pair has complex energy");

  if (complex_pair) {
    if (!label.identical()) throw SolutionRejected("non-identical labels must have real momenta");
    if (!(std::abs(k2 - std::conj(k1)) <= kImaginaryBound))
      throw SolutionRejected("complex momenta are not a conjugate pair");
  } else {
    sol.pair.k1 = cdouble(k1.real(), 0.0);
    sol.pair.k2 = cdouble(k2.real(), 0.0);
  }
  return sol;
}

Solution solve_state(const SolveRequest& req) {
  if (!std::isfinite(req.U)) throw UsageError("solve_state: U must be finite");
  const NewtonConfig cfg = req.newton.value_or(default_solver_newton());
  cfg.validate();
  if (req.U == 0.0) return non_interacting(req.label);
  if (req.label.identical()) return solve_identical(req.U, req.label, cfg);

  NonidenticalOptions opts;
  opts.newton = cfg;
  if (req.n_max) opts.n_max = *req.n_max;
  return solve_nonidentical(req.U, req.label, opts);
}

SweepResult sweep(const StateLabel& label, double U_start, double U_end, int steps, const SweepOptions& opts) {
  if (steps < 2) throw UsageError("sweep: steps must be >= 2");
  if (!std::isfinite(U_start) || !std::isfinite(U_end)) throw UsageError("sweep: U range must be finite");
  const NewtonConfig cfg = opts.newton.value_or(default_solver_newton());
  cfg.validate();

  SweepResult out{label, std::vector<SweepPoint>(static_cast<std::size_t>(steps))};
  const double du = (U_end - U_start) / (steps - 1);
  int origin = 0;
  for (int i = 0; i < steps; ++i) {
    const double u = (i == steps - 1) ? U_end : U_start + i * du;
    out.points[static_cast<std::size_t>(i)].U = u;
    if (std::abs(u) < std::abs(out.points[static_cast<std::size_t>(origin)].U)) origin = i;
  }

  auto fresh = [&](double u) -> std::optional<Solution> {
    try {
      SolveRequest req{u, label, cfg, opts.n_max};
      return solve_state(req);
    } catch (const NumericalFailure&) {
      return std::nullopt;
    }
  };

  // `recent` holds up to two most recent solved points of a march, newest last.
  using History = std::vector<std::pair<double, Eigen::Vector2cd>>;
  auto march = [&](int first, int last, int dir, History recent) {
    for (int i = first; i != last + dir; i += dir) {
      SweepPoint& pt = out.points[static_cast<std::size_t>(i)];
      const double u = pt.U;
      std::optional<Solution> sol;

      // A lone previous point is a poor seed near U = 0, where the momenta
      // move like sqrt(U); those steps go through a fresh solve instead.
      const bool can_continue = recent.size() == 2 && recent.front().first != 0.0 &&
                                std::signbit(recent.back().first) == std::signbit(u) && u != 0.0;
      if (can_continue) {
        const auto& [u1, k1] = recent.back();
        const auto& [u0, k0] = recent.front();
        const Eigen::Vector2cd predictor = k1 + (k1 - k0) * ((u - u1) / (u1 - u0));
        const double predicted_change = (predictor - k1).cwiseAbs().maxCoeff();
        try {
          const TranscendentalCase eq = TranscendentalCase::for_label(u, label);
          const auto report = complex_newton(eq, predictor, cfg);
          Solution candidate = finalize_pair(report.solution, eq, label, report.iterations);
          const double change = (candidate.pair.values() - k1).cwiseAbs().maxCoeff();
          if (change <= 10.0 * predicted_change + 1e-9) sol = std::move(candidate);
        } catch (const NumericalFailure&) {
        }
      }
      if (!sol) sol = fresh(u);

      if (sol) {
        if (!recent.empty() && recent.back().first == 0.0) recent.clear();
        recent.emplace_back(u, sol->pair.values());
        if (recent.size() > 2) recent.erase(recent.begin());
      } else {
        recent.clear();
      }
      pt.solution = std::move(sol);
    }
  };

  march(origin, steps - 1, +1, {});
  if (origin > 0) {
    History seed;
    const SweepPoint& o = out.points[static_cast<std::size_t>(origin)];
    if (o.solution) seed.emplace_back(o.U, o.solution->pair.values());
    march(origin - 1, 0, -1, std::move(seed));
  }
  return out;
}

}  // namespace contactwell
