// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "contactwell/cimethod.hpp"
#include "contactwell/numerics.hpp"
#include "contactwell/solver.hpp"
#include "contactwell/wavefn.hpp"

using namespace contactwell;
using std::numbers::pi;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Reference {
  double U;
  int n, m;
  double re1, im1, re2, im2;
};

// Reference momenta, rounded to two decimals.
const std::vector<Reference> kAttractive = {
    {-1.0, 1, 1, 3.06, 0.52, 3.06, -0.52},
    {-1.0, 2, 1, 6.05, 0.0, 3.27, 0.0},
    {-1.0, 2, 2, 6.24, 0.52, 6.24, -0.52},
    {-1.0, 3, 1, 9.30, 0.0, 3.18, 0.0},
};
const std::vector<Reference> kRepulsive = {
    {1.0, 1, 1, 3.70, 0.0, 2.74, 0.0},
    {1.0, 2, 2, 6.80, 0.0, 5.84, 0.0},
};

Solution solve(double U, int n, int m) { return solve_state({U, StateLabel(n, m), std::nullopt, std::nullopt}); }

void compare_reference(Check& c, const Reference& p, const Solution& s, double elapsed) {
  const std::string tag = "(" + std::to_string(p.n) + "," + std::to_string(p.m) + ") U=" + fmt(p.U);
  const double got[4] = {s.pair.k1.real(), s.pair.k1.imag(), s.pair.k2.real(), s.pair.k2.imag()};
  const double want[4] = {p.re1, p.im1, p.re2, p.im2};
  for (int i = 0; i < 4; ++i)
    c.expect(std::abs(round2(got[i]) - want[i]) <= 0.01 + 1e-12, tag + " component " + std::to_string(i) + " = " +
                                                                      fmt(got[i]) + ", expected " + fmt(want[i]));
  const double budget = p.n == p.m ? 1.0 : 60.0;
  c.expect(elapsed < budget, tag + " took " + fmt(elapsed) + " s");
}

Check criterion_1() {
  Check c;
  for (const auto& p : kAttractive) {
    const auto t0 = std::chrono::steady_clock::now();
    const Solution s = solve(p.U, p.n, p.m);
    compare_reference(c, p, s, seconds_since(t0));
  }
  return c;
}

Check criterion_2() {
  Check c;
  for (const auto& p : kRepulsive) {
    const auto t0 = std::chrono::steady_clock::now();
    const Solution s = solve(p.U, p.n, p.m);
    compare_reference(c, p, s, seconds_since(t0));
  }
  return c;
}

Check criterion_3() {
  Check c;
  std::vector<std::tuple<double, int, int>> cases;
  for (const auto& p : kAttractive) cases.emplace_back(p.U, p.n, p.m);
  for (const auto& p : kRepulsive) cases.emplace_back(p.U, p.n, p.m);
  for (double U : {-10.0, -5.0, -0.1, 0.0, 0.1, 5.0})
    for (int n = 1; n <= 5; ++n) cases.emplace_back(U, n, n);
  for (double U : {-3.0, -0.5, 0.5, 3.0}) {
    cases.emplace_back(U, 2, 1);
    cases.emplace_back(U, 3, 1);
  }
  double worst = 0.0;
  for (const auto& [U, n, m] : cases) {
    const Solution s = solve(U, n, m);
    const double r = residual<cdouble>(s.pair.equation, s.pair.values()).lpNorm<Eigen::Infinity>();
    worst = std::max(worst, r);
    c.expect(r <= 1e-10, "residual " + fmt(r) + " at U=" + fmt(U));
  }
  c.detail += (c.detail.empty() ? "" : "; ") + std::string("worst residual ") + fmt(worst) + " over " +
              std::to_string(cases.size()) + " solves";
  return c;
}

Check criterion_4() {
  Check c;
  for (double U : {-0.1, -1.0, -5.0})
    for (int n = 1; n <= 5; ++n) {
      const Solution s = solve(U, n, n);
      const std::string tag = "n=" + std::to_string(n) + " U=" + fmt(U);
      c.expect(std::abs(s.pair.k2 - std::conj(s.pair.k1)) <= 1e-9, tag + " not a conjugate pair");
      c.expect(std::abs(s.pair.energy().imag()) <= 1e-9, tag + " complex energy");
      c.expect(s.pair.k1.imag() > 0.0, tag + " momenta are real");
    }
  return c;
}

Check criterion_5() {
  Check c;
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}, {5, 5}}) {
    const Solution s = solve(0.0, n, m);
    c.expect(s.pair.k1 == cdouble(std::max(n, m) * pi, 0.0) && s.pair.k2 == cdouble(std::min(n, m) * pi, 0.0),
             "U=0 not exact for (" + std::to_string(n) + "," + std::to_string(m) + ")");
  }
  // Step 0.05 over [-10, 0]: 201 grid points ending at U = 0.
  for (int n = 1; n <= 5; ++n) {
    const SweepResult r = sweep(StateLabel(n, n), -10.0, 0.0, 201);
    const SweepPoint& end = r.points.back();
    c.expect(end.U == 0.0 && end.solution.has_value(), "sweep endpoint missing for n=" + std::to_string(n));
    if (end.solution) {
      const double err = (end.solution->pair.values() - Eigen::Vector2cd::Constant(n * pi)).cwiseAbs().maxCoeff();
      c.expect(err <= 1e-3, "endpoint off by " + fmt(err) + " for n=" + std::to_string(n));
    }
  }
  return c;
}

double interaction_oracle(int n, int m, int np, int mp, double U) {
  auto diag = [](int a, int b, double x) {
    return 2.0 * pair_normalization(a, b) * 2.0 * std::sin(a * pi * x) * std::sin(b * pi * x);
  };
  return U * simpson_1d([&](double x) { return diag(n, m, x) * diag(np, mp, x); }, 0.0, 1.0, 4000);
}

double kinetic_oracle(int n, int m, int np, int mp) {
  auto sym = [](int a, int b, double x, double y) {
    return pair_normalization(a, b) * 2.0 *
           (std::sin(a * pi * x) * std::sin(b * pi * y) + std::sin(b * pi * x) * std::sin(a * pi * y));
  };
  const double overlap =
      simpson_2d([&](double x, double y) { return sym(n, m, x, y) * sym(np, mp, x, y); }, Rectangle{}, 200, 200);
  return pi * pi * (np * np + mp * mp) * overlap;
}

Check criterion_6() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  int tuples = 0;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int np = 1; np <= 4; ++np)
        for (int mp = 1; mp <= 4; ++mp) {
          const double di = std::abs(interaction_element(n, m, np, mp, -1.0) - interaction_oracle(n, m, np, mp, -1.0));
          const double dk = std::abs(kinetic_element(n, m, np, mp) - kinetic_oracle(n, m, np, mp));
          worst = std::max({worst, di, dk});
          ++tuples;
        }
  c.expect(worst <= 1e-8, "worst deviation " + fmt(worst));
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 10.0, "took " + fmt(elapsed) + " s");
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(tuples) + " tuples, worst " + fmt(worst);
  return c;
}

Check criterion_7() {
  Check c;
  const auto states = spectrum(-1.0, 30, 4);
  for (std::size_t i = 0; i < kAttractive.size(); ++i) {
    const auto& p = kAttractive[i];
    c.expect(states[i].dominant_label == StateLabel(p.n, p.m),
             "level " + std::to_string(i) + " labelled (" + std::to_string(states[i].dominant_label.n()) + "," +
                 std::to_string(states[i].dominant_label.m()) + ")");
    const double e_root = solve(p.U, p.n, p.m).pair.energy().real();
    const double rel = std::abs(states[i].energy - e_root) / std::abs(e_root);
    c.expect(rel <= 0.02, "level " + std::to_string(i) + " CI " + fmt(states[i].energy) + " vs roots " +
                              fmt(e_root));
  }
  return c;
}

Check criterion_8() {
  Check c;
  const DensityGrid att = density_grid(normalize(solve(-1.0, 2, 2).pair), 201);
  const DensityGrid rep = density_grid(normalize(solve(1.0, 2, 2).pair), 201);
  c.expect(att.diagonal_mean() > att.anti_diagonal_mean(),
           "U=-1 diagonal " + fmt(att.diagonal_mean()) + " vs anti " + fmt(att.anti_diagonal_mean()));
  c.expect(rep.diagonal_mean() < rep.anti_diagonal_mean(),
           "U=+1 diagonal " + fmt(rep.diagonal_mean()) + " vs anti " + fmt(rep.anti_diagonal_mean()));
  return c;
}

Check criterion_9() {
  Check c;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> x(0.05, 0.95);
  double worst = 0.0;
  std::vector<Reference> all = kAttractive;
  all.insert(all.end(), kRepulsive.begin(), kRepulsive.end());
  for (const auto& p : all) {
    const SingletWavefunction wf = normalize(solve(p.U, p.n, p.m).pair);
    int taken = 0;
    while (taken < 50) {
      const double a = x(rng), b = x(rng);
      if (std::abs(a - b) < 0.05) continue;
      worst = std::max(worst, schrodinger_residual(wf, a, b));
      ++taken;
    }
  }
  c.expect(worst <= 1e-4, "worst residual " + fmt(worst));
  c.detail += (c.detail.empty() ? "" : "; ") + std::string("worst ") + fmt(worst);
  return c;
}

Check criterion_10() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> at_minus_one;
  for (int n = 1; n <= 5; ++n) {
    const SweepResult r = sweep(StateLabel(n, n), -10.0, 0.0, 201);
    const std::string tag = "n=" + std::to_string(n);
    bool complete = true;
    for (const auto& pt : r.points) complete = complete && pt.solution.has_value();
    c.expect(complete, tag + " sweep has gaps");
    if (!complete) continue;
    c.expect(r.points.back().solution->pair.k1.imag() == 0.0, tag + " Im k1 nonzero at U=0");
    for (std::size_t i = 1; i < r.points.size(); ++i)
      if (!(r.points[i - 1].solution->pair.k1.imag() > r.points[i].solution->pair.k1.imag())) {
        c.expect(false, tag + " Im k1 not increasing in |U| near U=" + fmt(r.points[i].U));
        break;
      }
    at_minus_one.push_back(r.points[180].solution->pair.k1.imag());  // U = -10 + 180 * 0.05
  }
  if (at_minus_one.size() == 5) {
    const auto [lo, hi] = std::minmax_element(at_minus_one.begin(), at_minus_one.end());
    c.expect(*hi - *lo <= 0.02, "Im k1 spread at U=-1 is " + fmt(*hi - *lo));
    c.detail += (c.detail.empty() ? "" : "; ") + std::string("spread at U=-1 ") + fmt(*hi - *lo);
  }
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 30.0, "five sweeps took " + fmt(elapsed) + " s");
  return c;
}

Check criterion_11() {
  Check c;
  double worst = 0.0;
  std::vector<Reference> all = kAttractive;
  all.insert(all.end(), kRepulsive.begin(), kRepulsive.end());
  for (const auto& p : all) {
    const double err = std::abs(density_grid(normalize(solve(p.U, p.n, p.m).pair), 201).integral() - 1.0);
    worst = std::max(worst, err);
  }
  for (double U : {-5.0, 0.0, 5.0}) {
    const double err = std::abs(density_grid(normalize(solve(U, 1, 1).pair), 201).integral() - 1.0);
    worst = std::max(worst, err);
  }
  worst = std::max(worst, std::abs(triplet_density_grid(1, 2, 201).integral() - 1.0));
  c.expect(worst <= 1e-4, "worst normalization error " + fmt(worst));
  c.detail += (c.detail.empty() ? "" : "; ") + std::string("worst ") + fmt(worst);
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"1  reference roots, U=-1", criterion_1},
      {"2  reference roots, U=+1", criterion_2},
      {"3  residual exactness", criterion_3},
      {"4  conjugacy and real energy", criterion_4},
      {"5  non-interacting limit", criterion_5},
      {"6  CI elements vs quadrature", criterion_6},
      {"7  CI ordering and energies", criterion_7},
      {"8  density diagonal contrast", criterion_8},
      {"9  eigenfunction property", criterion_9},
      {"10 sweep shape", criterion_10},
      {"11 normalization", criterion_11},
  };

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(t0);
    std::printf("%s  %-32s %7.2fs  %s\n", c.ok ? "PASS" : "FAIL", name.c_str(), elapsed, c.detail.c_str());
    if (!c.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
