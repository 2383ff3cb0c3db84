#pragma once

#include <Eigen/Core>

#include <utility>

#include "contactwell/transcend.hpp"

namespace contactwell {

enum class Branch { plus, minus };

// Small-U displacement of an identical-parity pair from (n pi, n pi).
struct PerturbativeShift {
  cdouble delta_x;
  cdouble delta_y;
  int n = 1;
  double U = 0.0;
  Branch branch = Branch::plus;
};

// R = (U / 2 n pi)^2 + (U - U^3 / (6 n^2 pi^2)) / (2 + U / 2).
// Throws DegenerateDenominator at U = -4.
double shift_radicand(int n, double U);

// delta_x = U / (2 n pi) +- sqrt(R), delta_y = U / (2 n pi) -+ sqrt(R), with
// sqrt(R) = +i sqrt(|R|) for R < 0. Returns {plus, minus}.
std::pair<PerturbativeShift, PerturbativeShift> shifts(int n, double U);

// (n pi + delta_x, n pi + delta_y) on the plus branch. Throws WrongSolvePath
// for n != m.
Eigen::Vector2cd initial_guess(const StateLabel& label, double U);

}  // namespace contactwell
