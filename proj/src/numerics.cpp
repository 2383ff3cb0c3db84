#include "contactwell/numerics.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace contactwell {

void NewtonConfig::validate() const {
  if (max_iterations < 1) throw UsageError("NewtonConfig: max_iterations must be >= 1");
  if (!(residual_tolerance > 0.0)) throw UsageError("NewtonConfig: residual_tolerance must be > 0");
  if (!(step_tolerance > 0.0)) throw UsageError("NewtonConfig: step_tolerance must be > 0");
  if (max_halvings < 0) throw UsageError("NewtonConfig: max_halvings must be >= 0");
}

namespace detail {

namespace {

double inf_norm(const Eigen::VectorXd& v) {
  if (!v.allFinite()) return std::numeric_limits<double>::infinity();
  return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
}

}  // namespace

NewtonReport<double> newton_iterate(const RealResidual& residual, const RealJacobian& jacobian,
                                    Eigen::VectorXd x, const NewtonConfig& cfg) {
  Eigen::VectorXd fx = residual(x);
  if (fx.size() != x.size()) throw UsageError("newton_solve: residual and unknown dimensions differ");
  double r = inf_norm(fx);
  if (!std::isfinite(r)) throw NumericalFailure("newton_solve: residual is not finite at the initial point");

  NewtonReport<double> best{x, 0, r, false};
  int it = 0;
  while (r > cfg.residual_tolerance && it < cfg.max_iterations) {
    ++it;
    const Eigen::MatrixXd jx = jacobian(x);
    if (jx.rows() != x.size() || jx.cols() != x.size())
      throw UsageError("newton_solve: Jacobian has the wrong shape");
    if (!jx.allFinite()) throw SingularJacobian("newton_solve: Jacobian is not finite");

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(jx);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    const double rcond = lu.rcond();
    if (min_pivot == 0.0 || !(rcond >= std::numeric_limits<double>::epsilon()))
      throw SingularJacobian("newton_solve: Jacobian is singular to working precision");
    const Eigen::VectorXd step = lu.solve(fx);

    double t = 1.0;
    Eigen::VectorXd trial = x - step;
    Eigen::VectorXd f_trial = residual(trial);
    double r_trial = inf_norm(f_trial);
    if (cfg.damping_enabled) {
      for (int h = 0; h < cfg.max_halvings && !(r_trial < r); ++h) {
        t *= 0.5;
        trial = x - t * step;
        f_trial = residual(trial);
        r_trial = inf_norm(f_trial);
      }
    }
    if (!std::isfinite(r_trial)) break;

    x = std::move(trial);
    fx = std::move(f_trial);
    r = r_trial;
    if (r < best.final_residual_norm) best = {x, it, r, false};
    best.iterations = it;

    if (t * inf_norm(step) <= cfg.step_tolerance * std::max(1.0, inf_norm(x))) break;
  }
  best.converged = best.final_residual_norm <= cfg.residual_tolerance;
  return best;
}

}  // namespace detail

SymmetricEigen jacobi_eigh(const Eigen::Ref<const Eigen::MatrixXd>& input) {
  if (input.rows() != input.cols()) throw NotSymmetric("jacobi_eigh: matrix is not square");
  const Eigen::Index n = input.rows();
  const double scale = input.norm();
  if (!std::isfinite(scale)) throw UsageError("jacobi_eigh: matrix has non-finite entries");
  if ((input - input.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1e-300) && n > 0)
    throw NotSymmetric("jacobi_eigh: matrix is not symmetric");

  Eigen::MatrixXd a = 0.5 * (input + input.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  SymmetricEigen out;

  const double target = 1e-12 * scale;
  constexpr int kMaxSweeps = 100;
  Eigen::VectorXd col_p(n), col_q(n);

  auto off_norm = [&]() {
    double sum = 0.0;
    for (Eigen::Index q = 1; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) sum += a(p, q) * a(p, q);
    return std::sqrt(2.0 * sum);
  };

  int sweep = 0;
  while (off_norm() > target) {
    if (++sweep > kMaxSweeps)
      throw NoConvergence("jacobi_eigh: sweep budget exhausted", Eigen::VectorXcd(), off_norm());
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double g = 100.0 * std::abs(apq);
        if (sweep > 4 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        if (apq == 0.0) continue;

        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        col_p = a.col(p);
        col_q = a.col(q);
        a.col(p) = c * col_p - s * col_q;
        a.col(q) = s * col_p + c * col_q;
        a.row(p) = a.col(p).transpose();
        a.row(q) = a.col(q).transpose();
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;

        col_p = v.col(p);
        col_q = v.col(q);
        v.col(p) = c * col_p - s * col_q;
        v.col(q) = s * col_p + c * col_q;
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src);
    Eigen::VectorXd col = v.col(src);
    const double peak = col.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(col(i)) >= peak * (1.0 - 1e-12)) {
        if (col(i) < 0.0) col = -col;
        break;
      }
    }
    out.eigenvectors.col(k) = col;
  }
  out.sweeps = sweep;
  return out;
}

Eigen::VectorXd simpson_weights(int panels, double a, double b) {
  if (panels < 2 || panels % 2 != 0)
    throw BadPanelCount("Simpson rule needs an even panel count >= 2, got " + std::to_string(panels));
  const double h = (b - a) / panels;
  Eigen::VectorXd w(panels + 1);
  for (int i = 0; i <= panels; ++i) w(i) = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
  return w * (h / 3.0);
}

}  // namespace contactwell
