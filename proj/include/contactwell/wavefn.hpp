#pragma once

#include <Eigen/Core>

#include <string>

#include "contactwell/transcend.hpp"

namespace contactwell {

// Box length is fixed to 1: momenta are dimensionless and positions are in
// units of L. Energies are in units of hbar^2 / (2 m L^2); multiplying by that
// constant gives physical units.

// Unnormalized singlet amplitude with N = 1, M = s:
//   x1 < x2: sin(k1 x1) sin(k2 (1 - x2)) + s sin(k2 x1) sin(k1 (1 - x2))
//   x1 > x2: the same with x1 and x2 exchanged.
cdouble singlet_amplitude(const Eigen::Vector2cd& k, int s, double x1, double x2);

// sqrt(2) [sin(n pi x1) sin(m pi x2) - sin(m pi x1) sin(n pi x2)], already
// normalized. Throws IdenticallyZero for n = m.
double triplet_amplitude(int n, int m, double x1, double x2);

struct SingletWavefunction {
  MomentumPair pair;
  int s = 1;
  double norm = 1.0;  // multiplies singlet_amplitude
  double peak = 1.0;  // max |Psi| of the normalized state, sampled on a grid

  cdouble operator()(double x1, double x2) const { return norm * singlet_amplitude(pair.values(), s, x1, x2); }
};

inline constexpr int kNormalizationPanels = 400;
inline constexpr int kDefaultGridResolution = 201;

// Fixes the overall constant so that the integral of |Psi|^2 over the unit
// square is 1. The integrand has a kink along x1 = x2, so the square is split
// into its two triangles (equal by exchange symmetry) and each is integrated
// by nested Simpson with 400 panels per axis. Throws DegenerateState when
// the integral vanishes.
SingletWavefunction normalize(const MomentumPair& pair);

struct DensityGrid {
  int resolution = kDefaultGridResolution;
  Eigen::MatrixXd values;  // values(i, j) = |Psi(x_i, x_j)|^2, x_i = i / (resolution - 1)
  std::string symmetry = "singlet";
  double U = 0.0;
  StateLabel label{1, 1};
  cdouble k1;
  cdouble k2;
  int s = 1;
  double norm = 1.0;

  double coordinate(int i) const { return static_cast<double>(i) / (resolution - 1); }
  // Simpson estimate of the integral of the sampled density.
  double integral() const;
  double diagonal_mean() const;       // over x1 = x2
  double anti_diagonal_mean() const;  // over x1 + x2 = 1
};

// Throws UsageError unless the resolution is odd and >= 3.
DensityGrid density_grid(const SingletWavefunction& wf, int resolution = kDefaultGridResolution);
DensityGrid triplet_density_grid(int n, int m, int resolution = kDefaultGridResolution);

// |(-d^2/dx1^2 - d^2/dx2^2) Psi - E Psi| / max|Psi| at an interior point, by
// five-point central differences with step 1e-4 and E = k1^2 + k2^2. Requires
// distance >= 0.05 from the diagonal and the walls.
double schrodinger_residual(const SingletWavefunction& wf, double x1, double x2);

// Mismatch of the contact condition on the diagonal,
//   (d/dx1 - d/dx2) Psi |_(x1 -> x2+) = (U / 2) Psi(x, x),
// divided by max|Psi|. The one-sided derivatives are taken analytically from
// the x1 > x2 branch. This is the condition that distinguishes true momentum
// solutions; away from the diagonal every product of sines is already a free
// eigenfunction.
double contact_residual(const SingletWavefunction& wf, double x);

}  // namespace contactwell
