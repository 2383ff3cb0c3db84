#include "contactwell/cimethod.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "contactwell/numerics.hpp"

namespace contactwell {

SymmetricBasis::SymmetricBasis(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw UsageError("SymmetricBasis: n_max must be >= 1");
  states_.reserve(static_cast<std::size_t>(n_max) * (n_max + 1) / 2);
  for (int n = 1; n <= n_max; ++n)
    for (int m = n; m <= n_max; ++m) states_.emplace_back(n, m);
}

Eigen::Index SymmetricBasis::index(int n, int m) const noexcept {
  if (n > m) std::swap(n, m);
  if (n < 1 || m > n_max_) return -1;
  // rows before block n: sum_{i<n} (n_max - i + 1)
  const Eigen::Index before = static_cast<Eigen::Index>(n - 1) * n_max_ - static_cast<Eigen::Index>(n - 1) * (n - 2) / 2;
  return before + (m - n);
}

double pair_normalization(int n, int m) { return n == m ? 0.5 : std::numbers::sqrt2 / 2.0; }

namespace {

inline double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

}  // namespace

double kinetic_element(int n, int m, int np, int mp) {
  const double overlap = delta(n, np) * delta(m, mp) + delta(n, mp) * delta(np, m);
  if (overlap == 0.0) return 0.0;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return 2.0 * pi2 * (np * np + mp * mp) * pair_normalization(np, mp) * pair_normalization(n, m) * overlap;
}

double interaction_element(int n, int m, int np, int mp, double U) {
  const double pattern = delta(n + mp, m + np) + delta(n + np, m + mp) - delta(m + np + mp, n) -
                         delta(n + np + mp, m) - delta(n + m + mp, np) - delta(n + m + np, mp) +
                         delta(n + m, np + mp);
  return 2.0 * U * pair_normalization(np, mp) * pair_normalization(n, m) * pattern;
}

CIHamiltonian build_hamiltonian(const SymmetricBasis& basis, double U) {
  const Eigen::Index dim = basis.size();
  CIHamiltonian h{Eigen::MatrixXd(dim, dim), U, basis};
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto [n, m] = basis.state(i);
    for (Eigen::Index j = i; j < dim; ++j) {
      const auto [np, mp] = basis.state(j);
      const double value = kinetic_element(n, m, np, mp) + interaction_element(n, m, np, mp, U);
      h.matrix(i, j) = value;
      h.matrix(j, i) = value;
    }
  }
  return h;
}

std::vector<CIEigenstate> full_spectrum(double U, int n_max) {
  const SymmetricBasis basis(n_max);
  const CIHamiltonian h = build_hamiltonian(basis, U);
  const SymmetricEigen eig = jacobi_eigh(h.matrix);

  std::vector<CIEigenstate> out;
  out.reserve(static_cast<std::size_t>(basis.size()));
  for (Eigen::Index k = 0; k < basis.size(); ++k) {
    CIEigenstate st;
    st.energy = eig.eigenvalues(k);
    st.coefficients = eig.eigenvectors.col(k);
    // Basis order is lexicographic in (n, m), so the first maximum wins ties.
    Eigen::Index best = 0;
    double best_abs = -1.0;
    for (Eigen::Index i = 0; i < basis.size(); ++i) {
      const double a = std::abs(st.coefficients(i));
      if (a > best_abs * (1.0 + 1e-12)) {
        best = i;
        best_abs = a;
      }
    }
    const auto [n, m] = basis.state(best);
    st.dominant_label = StateLabel(m, n);
    st.leading_coefficient = best_abs;
    out.push_back(std::move(st));
  }
  return out;
}

std::vector<CIEigenstate> spectrum(double U, int n_max, int levels) {
  if (n_max < 1) throw UsageError("spectrum: basis cutoff must be >= 1");
  const int size = n_max * (n_max + 1) / 2;
  if (levels < 1 || levels > size)
    throw UsageError("spectrum: requested " + std::to_string(levels) + " levels from a basis of " +
                     std::to_string(size) + " states");
  auto all = full_spectrum(U, n_max);
  all.resize(static_cast<std::size_t>(levels));
  return all;
}

double energy_for_state(double U, const StateLabel& label, int n_max) {
  for (const auto& st : full_spectrum(U, n_max))
    if (st.dominant_label.same_state(label)) return st.energy;
  throw LabelNotFound("no CI eigenstate at cutoff " + std::to_string(n_max) + " is dominated by (" +
                      std::to_string(label.n()) + "," + std::to_string(label.m()) + ")");
}

}  // namespace contactwell
