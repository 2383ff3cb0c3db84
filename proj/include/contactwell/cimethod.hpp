#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "contactwell/transcend.hpp"

namespace contactwell {

// Symmetric two-particle product states |n, m> with 1 <= n <= m <= n_max,
// ordered (1,1), (1,2), ..., (1,n_max), (2,2), ...
class SymmetricBasis {
 public:
  explicit SymmetricBasis(int n_max);

  int n_max() const noexcept { return n_max_; }
  Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(states_.size()); }
  const std::vector<std::pair<int, int>>& states() const noexcept { return states_; }
  const std::pair<int, int>& state(Eigen::Index row) const { return states_.at(static_cast<std::size_t>(row)); }
  // Row of |n, m> (either order); -1 when outside the cutoff.
  Eigen::Index index(int n, int m) const noexcept;

 private:
  int n_max_;
  std::vector<std::pair<int, int>> states_;
};

// 1/2 for n = m, 1/sqrt(2) otherwise.
double pair_normalization(int n, int m);

// <n,m| -d^2/dxi^2 - d^2/deta^2 |n',m'> in the symmetric basis.
double kinetic_element(int n, int m, int np, int mp);

// <n,m| U delta(xi - eta) |n',m'> in the symmetric basis.
double interaction_element(int n, int m, int np, int mp, double U);

struct CIHamiltonian {
  Eigen::MatrixXd matrix;
  double U = 0.0;
  SymmetricBasis basis{1};
};

CIHamiltonian build_hamiltonian(const SymmetricBasis& basis, double U);

struct CIEigenstate {
  double energy = 0.0;  // units of hbar^2 / (2 m L^2)
  Eigen::VectorXd coefficients;
  StateLabel dominant_label{1, 1};  // larger quantum number first
  double leading_coefficient = 0.0;  // |coefficient| of the dominant basis state
};

inline constexpr int kDefaultBasisCutoff = 30;

// All eigenstates of the CI Hamiltonian, ascending in energy.
std::vector<CIEigenstate> full_spectrum(double U, int n_max);

// The lowest `levels` eigenstates. Throws UsageError if levels exceeds the
// basis size.
std::vector<CIEigenstate> spectrum(double U, int n_max, int levels);

// Energy of the lowest eigenstate whose dominant label names `label`.
// Throws LabelNotFound when no eigenstate in the truncated basis matches.
double energy_for_state(double U, const StateLabel& label, int n_max = kDefaultBasisCutoff);

}  // namespace contactwell
