#pragma once

#include <Eigen/Core>

#include <complex>
#include <functional>
#include <type_traits>

#include "contactwell/errors.hpp"

namespace contactwell {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_complex_v = is_complex<T>::value;

struct NewtonConfig {
  int max_iterations = 100;
  double residual_tolerance = 1e-12;
  double step_tolerance = 1e-14;
  bool damping_enabled = true;
  int max_halvings = 20;

  // Throws UsageError when a field is out of range.
  void validate() const;
};

template <typename Scalar>
struct NewtonReport {
  Vector<Scalar> solution;
  int iterations = 0;
  double final_residual_norm = 0.0;
  bool converged = false;
};

namespace detail {

using RealResidual = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using RealJacobian = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

// Damped Newton on a real system. Returns the best iterate whether or not it
// converged; throws SingularJacobian on a zero pivot or overflowing condition
// estimate.
NewtonReport<double> newton_iterate(const RealResidual& residual, const RealJacobian& jacobian,
                                    Eigen::VectorXd x0, const NewtonConfig& cfg);

inline Eigen::VectorXd stack(const Eigen::VectorXcd& z) {
  Eigen::VectorXd x(2 * z.size());
  x << z.real(), z.imag();
  return x;
}

inline Eigen::VectorXcd unstack(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size() / 2;
  Eigen::VectorXcd z(n);
  z.real() = x.head(n);
  z.imag() = x.tail(n);
  return z;
}

}  // namespace detail

// Newton's method for residual(x) = 0.
//
// For complex Scalar the residual must be holomorphic and `jacobian` must
// return its complex derivative; the iteration runs on the 2N-dimensional real
// system of stacked real and imaginary parts, whose Jacobian is
// [[Re J, -Im J], [Im J, Re J]].
//
// Throws NoConvergence (carrying the best iterate) when the budget is spent,
// SingularJacobian when a linear solve breaks down.
template <typename Scalar, typename ResidualFn, typename JacobianFn>
NewtonReport<Scalar> newton_solve(ResidualFn&& residual, JacobianFn&& jacobian,
                                  const Vector<Scalar>& x0, const NewtonConfig& cfg = {}) {
  cfg.validate();
  NewtonReport<double> real_report;
  if constexpr (is_complex_v<Scalar>) {
    const Eigen::Index n = x0.size();
    auto f = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
      return detail::stack(Eigen::VectorXcd(residual(Vector<Scalar>(detail::unstack(x)))));
    };
    auto j = [&](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
      const Eigen::MatrixXcd jc = jacobian(Vector<Scalar>(detail::unstack(x)));
      Eigen::MatrixXd jr(2 * n, 2 * n);
      jr << jc.real(), -jc.imag(), jc.imag(), jc.real();
      return jr;
    };
    real_report = detail::newton_iterate(f, j, detail::stack(x0), cfg);
  } else {
    auto f = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd { return residual(x); };
    auto j = [&](const Eigen::VectorXd& x) -> Eigen::MatrixXd { return jacobian(x); };
    real_report = detail::newton_iterate(f, j, x0, cfg);
  }

  NewtonReport<Scalar> report;
  if constexpr (is_complex_v<Scalar>) {
    report.solution = detail::unstack(real_report.solution);
  } else {
    report.solution = real_report.solution;
  }
  report.iterations = real_report.iterations;
  report.final_residual_norm = real_report.final_residual_norm;
  report.converged = real_report.converged;
  if (!report.converged) {
    throw NoConvergence("Newton iteration did not reach the residual tolerance",
                        report.solution.template cast<std::complex<double>>(),
                        report.final_residual_norm);
  }
  return report;
}

struct SymmetricEigen {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // column i pairs with eigenvalues(i)
  int sweeps = 0;
};

// Cyclic Jacobi eigendecomposition of a real symmetric matrix. Each
// eigenvector is signed so its largest-magnitude component (first on ties) is
// positive. Throws NotSymmetric if |A - A^T| exceeds 1e-12 relative.
SymmetricEigen jacobi_eigh(const Eigen::Ref<const Eigen::MatrixXd>& a);

struct Rectangle {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
};

// Composite Simpson weights (including the h/3 factor) for `panels` panels on
// [a, b]; panels + 1 nodes.
Eigen::VectorXd simpson_weights(int panels, double a, double b);

template <typename F>
double simpson_1d(F&& f, double a, double b, int panels) {
  const Eigen::VectorXd w = simpson_weights(panels, a, b);
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double x = (i == panels) ? b : a + i * h;
    sum += w(i) * f(x);
  }
  return sum;
}

template <typename F>
double simpson_2d(F&& f, const Rectangle& domain, int panels_x, int panels_y) {
  const Eigen::VectorXd wx = simpson_weights(panels_x, domain.x_min, domain.x_max);
  const Eigen::VectorXd wy = simpson_weights(panels_y, domain.y_min, domain.y_max);
  const double hx = (domain.x_max - domain.x_min) / panels_x;
  const double hy = (domain.y_max - domain.y_min) / panels_y;
  double sum = 0.0;
  for (int i = 0; i <= panels_x; ++i) {
    const double x = (i == panels_x) ? domain.x_max : domain.x_min + i * hx;
    double row = 0.0;
    for (int j = 0; j <= panels_y; ++j) {
      const double y = (j == panels_y) ? domain.y_max : domain.y_min + j * hy;
      row += wy(j) * f(x, y);
    }
    sum += wx(i) * row;
  }
  return sum;
}

}  // namespace contactwell
