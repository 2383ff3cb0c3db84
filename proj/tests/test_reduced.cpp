#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>
#include <random>

#include "contactwell/reduced.hpp"

using namespace contactwell;
using std::numbers::pi;

namespace {

double round2(double v) { return std::round(v * 100.0) / 100.0; }

}  // namespace

TEST_CASE("params_to_momenta examples") {
  const Eigen::Vector2cd k = params_to_momenta({2 * pi * pi, 0.0, pi / 4});
  CHECK(std::abs(k(0) - pi) < 1e-14);
  CHECK(std::abs(k(1) - pi) < 1e-14);

  const Eigen::Vector2cd fig = params_to_momenta({47.3, 0.0, std::atan2(3.27, 6.05)});
  CHECK(fig(0).real() == doctest::Approx(3.27).epsilon(1e-3));
  CHECK(fig(1).real() == doctest::Approx(6.05).epsilon(1e-3));

  CHECK_THROWS_AS(params_to_momenta({-1.0, 0.5, 0.3}), InvalidReduction);
  CHECK_THROWS_AS(params_to_momenta({1.0, -0.1, 0.3}), InvalidReduction);
}

TEST_CASE("property: energy stays real and equals E") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> e(0.0, 400.0), rho(0.0, 5.0), theta(-7.0, 7.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const ReducedParams p{e(rng), rho(rng), theta(rng)};
    const Eigen::Vector2cd k = params_to_momenta(p);
    const cdouble energy = k(0) * k(0) + k(1) * k(1);
    const double scale = p.E_tilde + 2 * p.rho * p.rho + 1.0;
    CHECK(std::abs(energy.imag()) <= 1e-13 * scale);
    CHECK(std::abs(energy.real() - p.E_tilde) <= 1e-12 * scale);
    CHECK(std::abs(p.omega() * p.omega() - p.rho * p.rho - p.E_tilde) <= 1e-12 * scale);
  }
}

TEST_CASE("property: real pairs round-trip") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u(0.1, 20.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double a = u(rng), b = u(rng);
    const Eigen::Vector2cd k = params_to_momenta({a * a + b * b, 0.0, std::atan2(a, b)});
    CHECK(std::abs(k(0) - a) <= 1e-12 * std::max(1.0, a));
    CHECK(std::abs(k(1) - b) <= 1e-12 * std::max(1.0, b));
  }
}

TEST_CASE("fixed-energy stage lowers the residual") {
  const TranscendentalCase eq{-1.0, -1};
  const StateLabel label(2, 1);
  const StageAResult a = minimize_at_fixed_energy(eq, label, energy_for_state(-1.0, label));
  CHECK(a.final_objective < a.initial_objective);
  CHECK(a.params.rho >= 0.0);
  const Eigen::Vector2cd k = params_to_momenta(a.params);
  CHECK(k(0).real() == doctest::Approx(6.05).epsilon(0.01));
  CHECK(k(1).real() == doctest::Approx(3.27).epsilon(0.01));
}

TEST_CASE("solve_nonidentical reproduces the reference real roots at U = -1") {
  const Solution s21 = solve_nonidentical(-1.0, StateLabel(2, 1));
  CHECK(round2(s21.pair.k1.real()) == doctest::Approx(6.05));
  CHECK(round2(s21.pair.k2.real()) == doctest::Approx(3.27));
  CHECK(s21.residual_norm <= 1e-10);
  CHECK(s21.pair.k1.imag() == 0.0);
  CHECK(s21.pair.k2.imag() == 0.0);
  CHECK(s21.pair.equation.s == -1);

  const Solution s31 = solve_nonidentical(-1.0, StateLabel(3, 1));
  CHECK(round2(s31.pair.k1.real()) == doctest::Approx(9.30));
  CHECK(round2(s31.pair.k2.real()) == doctest::Approx(3.18));
  CHECK(s31.pair.equation.s == 1);
}

TEST_CASE("solve_nonidentical edge cases") {
  const Solution free = solve_nonidentical(0.0, StateLabel(2, 1), {5, {}, std::nullopt});
  CHECK(std::abs(free.pair.k1 - 2 * pi) < 1e-12);
  CHECK(std::abs(free.pair.k2 - pi) < 1e-12);

  // Reversed label order names the same state; k1 > k2 regardless.
  const Solution rev = solve_nonidentical(-1.0, StateLabel(1, 2));
  CHECK(rev.pair.k1.real() > rev.pair.k2.real());
  CHECK(round2(rev.pair.k1.real()) == doctest::Approx(6.05));

  CHECK_THROWS_AS(solve_nonidentical(-1.0, StateLabel(2, 2)), WrongSolvePath);

  NonidenticalOptions repulsive;
  const Solution rep = solve_nonidentical(1.0, StateLabel(2, 1), repulsive);
  CHECK(rep.pair.energy().real() > 5 * pi * pi);
}
