// contactwell: two electrons in a 1D infinite well with a contact interaction.
//
// Subcommands: solve, sweep, density, ci. Exit status 0 on success, 1 on a
// usage error, 2 when the numerics fail to produce a verified answer.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "contactwell/cimethod.hpp"
#include "contactwell/output.hpp"
#include "contactwell/solver.hpp"
#include "contactwell/wavefn.hpp"

namespace cw = contactwell;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

// Writes to --out when given, otherwise to stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw cw::UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    if (file_) {
      file_->close();
      if (!*file_) throw cw::UsageError("failed writing output file");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Momentum-pair solver for two electrons in a 1D well with a contact interaction"};
  app.require_subcommand(1);
  const std::vector<std::string> args(argv + 1, argv + argc);

  double U = 0.0;
  int n = 1, m = 1;
  std::string format = "json";
  double tol = cw::default_solver_newton().residual_tolerance;
  int basis = cw::kDefaultBasisCutoff;

  auto* solve = app.add_subcommand("solve", "Solve for the momentum pair of one state");
  solve->add_option("--U", U, "Interaction strength (negative is attractive)")->required();
  solve->add_option("--n", n, "First quantum number")->required()->check(CLI::PositiveNumber);
  solve->add_option("--m", m, "Second quantum number")->required()->check(CLI::PositiveNumber);
  solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("--tol", tol, "Newton residual tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--basis", basis, "CI cutoff n_max for n != m states")->check(CLI::PositiveNumber);

  double u_start = -10.0, u_end = 0.0;
  int steps = 200;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Continue one state's momenta over a U grid (CSV)");
  sweep->add_option("--n", n, "First quantum number")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--m", m, "Second quantum number")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--U-start", u_start, "First U of the grid")->required();
  sweep->add_option("--U-end", u_end, "Last U of the grid")->required();
  sweep->add_option("--steps", steps, "Number of grid points")->required()->check(CLI::Range(2, 1000000));
  sweep->add_option("--out", out_path, "Output file (default stdout)");

  int grid = cw::kDefaultGridResolution;
  std::string symmetry = "singlet";
  auto* density = app.add_subcommand("density", "Sample |Psi|^2 on the unit square (CSV)");
  density->add_option("--U", U, "Interaction strength")->required();
  density->add_option("--n", n, "First quantum number")->required()->check(CLI::PositiveNumber);
  density->add_option("--m", m, "Second quantum number")->required()->check(CLI::PositiveNumber);
  density->add_option("--grid", grid, "Samples per axis (odd)");
  density->add_option("--symmetry", symmetry, "Spatial symmetry")->check(CLI::IsMember({"singlet", "triplet"}));
  density->add_option("--out", out_path, "Output file (default stdout)");

  int levels = 4;
  auto* ci = app.add_subcommand("ci", "Lowest configuration-interaction levels");
  ci->add_option("--U", U, "Interaction strength")->required();
  ci->add_option("--basis", basis, "Cutoff n_max")->required()->check(CLI::PositiveNumber);
  ci->add_option("--levels", levels, "Number of levels")->check(CLI::PositiveNumber);
  ci->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      cw::SolveRequest req{U, cw::StateLabel(n, m), cw::default_solver_newton(), basis};
      req.newton->residual_tolerance = tol;
      const cw::Solution sol = cw::solve_state(req);
      const cw::SolveInputs in{U, n, m, tol, basis};
      if (format == "csv") {
        cw::write_solve_csv(std::cout, in, sol);
      } else {
        std::cout << cw::solve_record(args, in, sol).dump(2) << '\n';
      }
    } else if (*sweep) {
      Sink sink(out_path);
      const cw::SweepResult result = cw::sweep(cw::StateLabel(n, m), u_start, u_end, steps);
      cw::write_sweep_csv(sink.stream(), result);
      sink.close();
    } else if (*density) {
      cw::DensityGrid g;
      if (symmetry == "triplet") {
        g = cw::triplet_density_grid(n, m, grid);
        g.U = U;
      } else {
        const cw::Solution sol = cw::solve_state({U, cw::StateLabel(n, m), std::nullopt, std::nullopt});
        g = cw::density_grid(cw::normalize(sol.pair), grid);
      }
      Sink sink(out_path);
      cw::write_density_csv(sink.stream(), g);
      sink.close();
    } else if (*ci) {
      const auto states = cw::spectrum(U, basis, levels);
      if (format == "csv") {
        cw::write_ci_csv(std::cout, states);
      } else {
        std::cout << cw::ci_record(args, {U, basis, levels}, states).dump(2) << '\n';
      }
    }
  } catch (const cw::NumericalFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const cw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
