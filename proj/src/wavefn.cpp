#include "contactwell/wavefn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "contactwell/numerics.hpp"

namespace contactwell {

cdouble singlet_amplitude(const Eigen::Vector2cd& k, int s, double x1, double x2) {
  const double lo = std::min(x1, x2);
  const double hi = std::max(x1, x2);
  const cdouble k1 = k(0), k2 = k(1);
  return std::sin(k1 * lo) * std::sin(k2 * (1.0 - hi)) +
         static_cast<double>(s) * std::sin(k2 * lo) * std::sin(k1 * (1.0 - hi));
}

double triplet_amplitude(int n, int m, double x1, double x2) {
  if (n == m) throw IdenticallyZero("triplet amplitude vanishes identically for n = m");
  if (n < 1 || m < 1) throw InvalidLabel("triplet amplitude needs n, m >= 1");
  const double a = n * std::numbers::pi, b = m * std::numbers::pi;
  return std::numbers::sqrt2 * (std::sin(a * x1) * std::sin(b * x2) - std::sin(b * x1) * std::sin(a * x2));
}

SingletWavefunction normalize(const MomentumPair& pair) {
  const Eigen::Vector2cd k = pair.values();
  const int s = pair.equation.s;
  auto density = [&](double x1, double x2) { return std::norm(singlet_amplitude(k, s, x1, x2)); };

  // Lower triangle x1 < x2; the upper one is its mirror image.
  const double triangle = simpson_1d(
      [&](double x2) {
        if (x2 == 0.0) return 0.0;
        return simpson_1d([&](double x1) { return density(x1, x2); }, 0.0, x2, kNormalizationPanels);
      },
      0.0, 1.0, kNormalizationPanels);
  const double total = 2.0 * triangle;
  if (!(total > 1e-300) || !std::isfinite(total))
    throw DegenerateState("singlet wavefunction has vanishing norm");

  SingletWavefunction wf{pair, s, 1.0 / std::sqrt(total), 1.0};
  constexpr int kPeakSamples = 101;
  double peak = 0.0;
  for (int i = 0; i < kPeakSamples; ++i)
    for (int j = 0; j <= i; ++j) {
      const double x1 = static_cast<double>(i) / (kPeakSamples - 1);
      const double x2 = static_cast<double>(j) / (kPeakSamples - 1);
      peak = std::max(peak, std::abs(wf(x1, x2)));
    }
  wf.peak = peak;
  return wf;
}

namespace {

void check_resolution(int resolution) {
  if (resolution < 3 || resolution % 2 == 0)
    throw UsageError("density grid resolution must be odd and >= 3, got " + std::to_string(resolution));
}

}  // namespace

double DensityGrid::integral() const {
  const Eigen::VectorXd w = simpson_weights(resolution - 1, 0.0, 1.0);
  return w.dot(values * w);
}

double DensityGrid::diagonal_mean() const { return values.diagonal().mean(); }

double DensityGrid::anti_diagonal_mean() const { return values.rowwise().reverse().diagonal().mean(); }

DensityGrid density_grid(const SingletWavefunction& wf, int resolution) {
  check_resolution(resolution);
  DensityGrid g;
  g.resolution = resolution;
  g.values.resize(resolution, resolution);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = std::norm(wf(g.coordinate(i), g.coordinate(j)));
      g.values(i, j) = v;
      g.values(j, i) = v;
    }
  g.symmetry = "singlet";
  g.U = wf.pair.equation.U;
  g.label = wf.pair.label;
  g.k1 = wf.pair.k1;
  g.k2 = wf.pair.k2;
  g.s = wf.s;
  g.norm = wf.norm;
  return g;
}

DensityGrid triplet_density_grid(int n, int m, int resolution) {
  check_resolution(resolution);
  if (n == m) throw IdenticallyZero("triplet density vanishes identically for n = m");
  DensityGrid g;
  g.resolution = resolution;
  g.values.resize(resolution, resolution);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) {
      const double a = triplet_amplitude(n, m, g.coordinate(i), g.coordinate(j));
      g.values(i, j) = a * a;
    }
  g.symmetry = "triplet";
  g.label = StateLabel(n, m);
  g.k1 = cdouble(n * std::numbers::pi, 0.0);
  g.k2 = cdouble(m * std::numbers::pi, 0.0);
  g.s = 0;
  g.norm = std::numbers::sqrt2;
  return g;
}

double schrodinger_residual(const SingletWavefunction& wf, double x1, double x2) {
  constexpr double kMinDistance = 0.05;
  if (std::min({x1, x2, 1.0 - x1, 1.0 - x2}) < kMinDistance || std::abs(x1 - x2) < kMinDistance)
    throw UsageError("schrodinger_residual: point too close to the diagonal or a wall");
  constexpr double h = 1e-4;
  auto second = [&](double dx, double dy) {
    // -f(-2h) + 16 f(-h) - 30 f(0) + 16 f(h) - f(2h), over 12 h^2
    const cdouble f0 = wf(x1, x2);
    return (-wf(x1 - 2 * dx, x2 - 2 * dy) + 16.0 * wf(x1 - dx, x2 - dy) - 30.0 * f0 +
            16.0 * wf(x1 + dx, x2 + dy) - wf(x1 + 2 * dx, x2 + 2 * dy)) /
           (12.0 * h * h);
  };
  const cdouble laplacian = second(h, 0.0) + second(0.0, h);
  const cdouble energy = wf.pair.energy();
  return std::abs(-laplacian - energy * wf(x1, x2)) / wf.peak;
}

double contact_residual(const SingletWavefunction& wf, double x) {
  const cdouble k1 = wf.pair.k1, k2 = wf.pair.k2;
  const double s = wf.s;
  const double y = 1.0 - x;
  // Branch x1 > x2: sin(k1 x2) sin(k2 (1 - x1)) + s sin(k2 x2) sin(k1 (1 - x1))
  const cdouble d1 = -k2 * std::sin(k1 * x) * std::cos(k2 * y) - s * k1 * std::sin(k2 * x) * std::cos(k1 * y);
  const cdouble d2 = k1 * std::cos(k1 * x) * std::sin(k2 * y) + s * k2 * std::cos(k2 * x) * std::sin(k1 * y);
  const cdouble psi = singlet_amplitude(wf.pair.values(), wf.s, x, x);
  return std::abs(wf.norm * ((d1 - d2) - 0.5 * wf.pair.equation.U * psi)) / wf.peak;
}

}  // namespace contactwell
