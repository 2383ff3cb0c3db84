#include "contactwell/reduced.hpp"

#include <Eigen/QR>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace contactwell {

double ReducedParams::omega() const {
  const double radicand = E_tilde + rho * rho;
  if (!(radicand >= 0.0)) throw InvalidReduction("ReducedParams: E + rho^2 must be non-negative");
  return std::sqrt(radicand);
}

Eigen::Vector2cd params_to_momenta(const ReducedParams& p) {
  if (!(p.rho >= 0.0)) throw InvalidReduction("ReducedParams: rho must be non-negative");
  const double omega = p.omega();
  const double s = std::sin(p.theta), c = std::cos(p.theta);
  return {cdouble(omega * s, p.rho * c), cdouble(omega * c, -p.rho * s)};
}

namespace {

Eigen::Vector4d stacked_residual(const TranscendentalCase& eq, const ReducedParams& p) {
  const Eigen::Vector2cd f = residual<cdouble>(eq, params_to_momenta(p));
  return {f(0).real(), f(1).real(), f(0).imag(), f(1).imag()};
}

// d(stacked residual) / d(rho, theta)
Eigen::Matrix<double, 4, 2> stacked_jacobian(const TranscendentalCase& eq, const ReducedParams& p) {
  const double omega = p.omega();
  const double s = std::sin(p.theta), c = std::cos(p.theta);
  const Eigen::Vector2cd k = params_to_momenta(p);
  const Eigen::Matrix2cd jk = jacobian<cdouble>(eq, k);

  const double domega = omega > 0.0 ? p.rho / omega : 0.0;
  const Eigen::Vector2cd dk_drho(cdouble(domega * s, c), cdouble(domega * c, -s));
  const Eigen::Vector2cd dk_dtheta(cdouble(omega * c, -p.rho * s), cdouble(-omega * s, -p.rho * c));

  Eigen::Matrix<double, 4, 2> j;
  for (int col = 0; col < 2; ++col) {
    const Eigen::Vector2cd d = jk * (col == 0 ? dk_drho : dk_dtheta);
    j.col(col) << d(0).real(), d(1).real(), d(0).imag(), d(1).imag();
  }
  return j;
}

}  // namespace

StageAResult minimize_at_fixed_energy(const TranscendentalCase& eq, const StateLabel& label, double E_tilde) {
  eq.validate();
  if (!(E_tilde >= 0.0)) throw ReductionFailed("fixed-energy stage needs a non-negative energy");

  ReducedParams p{E_tilde, 0.0, std::atan2(label.n() * std::numbers::pi, label.m() * std::numbers::pi)};
  Eigen::Vector4d r = stacked_residual(eq, p);
  StageAResult out{p, r.squaredNorm(), r.squaredNorm(), 0};

  constexpr int kMaxIterations = 100;
  constexpr int kMaxHalvings = 30;
  for (int it = 1; it <= kMaxIterations; ++it) {
    const Eigen::Matrix<double, 4, 2> j = stacked_jacobian(eq, p);
    const Eigen::Vector2d step = j.colPivHouseholderQr().solve(-r);
    if (!step.allFinite()) break;

    double t = 1.0;
    bool improved = false;
    ReducedParams trial = p;
    Eigen::Vector4d r_trial;
    for (int h = 0; h <= kMaxHalvings; ++h, t *= 0.5) {
      trial.rho = std::max(0.0, p.rho + t * step(0));
      trial.theta = p.theta + t * step(1);
      r_trial = stacked_residual(eq, trial);
      if (r_trial.allFinite() && r_trial.squaredNorm() < r.squaredNorm()) {
        improved = true;
        break;
      }
    }
    if (!improved) break;

    const double gain = r.squaredNorm() - r_trial.squaredNorm();
    p = trial;
    r = r_trial;
    out.iterations = it;
    if (t * step.lpNorm<Eigen::Infinity>() < 1e-13 || gain <= 1e-15 * r.squaredNorm()) break;
  }

  out.params = p;
  out.final_objective = r.squaredNorm();
  if (!std::isfinite(out.final_objective))
    throw ReductionFailed("fixed-energy stage produced a non-finite residual");
  if (out.iterations == 0 && out.initial_objective > 1e-24)
    throw ReductionFailed("fixed-energy stage stagnated at its seed");
  return out;
}

Solution solve_nonidentical(double U, const StateLabel& label, const NonidenticalOptions& opts) {
  if (label.identical()) throw WrongSolvePath("solve_nonidentical needs n != m");
  const TranscendentalCase eq = TranscendentalCase::for_label(U, label);
  eq.validate();
  const StateLabel ordered = label.canonical();

  const double e_seed = opts.energy_seed ? *opts.energy_seed : energy_for_state(U, ordered, opts.n_max);
  const StageAResult stage_a = minimize_at_fixed_energy(eq, ordered, e_seed);
  const Eigen::Vector2cd k_a = params_to_momenta(stage_a.params);

  const Eigen::VectorXd x0 = k_a.real();
  const auto report = newton_solve<double>(
      [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return residual<double>(eq, Eigen::Vector2d(x(0), x(1)));
      },
      [&](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
        return jacobian<double>(eq, Eigen::Vector2d(x(0), x(1)));
      },
      x0, opts.newton);

  double k1 = report.solution(0), k2 = report.solution(1);
  if (k1 < k2) std::swap(k1, k2);
  Solution sol{MomentumPair{cdouble(k1, 0.0), cdouble(k2, 0.0), eq, label}, 0.0,
               stage_a.iterations + report.iterations};
  sol.residual_norm = verify_solution(sol.pair);
  if (!(sol.residual_norm <= 1e-10))
    throw NoConvergence("solve_nonidentical: residual " + std::to_string(sol.residual_norm) + " above 1e-10",
                        sol.pair.values(), sol.residual_norm);
  return sol;
}

}  // namespace contactwell
