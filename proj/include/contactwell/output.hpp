#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "contactwell/cimethod.hpp"
#include "contactwell/solver.hpp"
#include "contactwell/wavefn.hpp"

namespace contactwell {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr int kCsvDigits = 12;

// printf-style %.{digits}g; "nan"/"inf" pass through unchanged.
std::string format_number(double value, int significant_digits = kCsvDigits);

struct SolveInputs {
  double U = 0.0;
  int n = 1;
  int m = 1;
  double tol = 0.0;
  int basis = kDefaultBasisCutoff;
};

nlohmann::json solve_record(const std::vector<std::string>& argv, const SolveInputs& in, const Solution& sol);
void write_solve_csv(std::ostream& os, const SolveInputs& in, const Solution& sol);

// Header `U,re_k1,im_k1,re_k2,im_k2,E,residual`; gaps leave every field but U
// empty.
void write_sweep_csv(std::ostream& os, const SweepResult& result);

// Header `x1,x2,density`, then `#` metadata lines, then row-major samples.
void write_density_csv(std::ostream& os, const DensityGrid& grid);

struct CIInputs {
  double U = 0.0;
  int basis = kDefaultBasisCutoff;
  int levels = 4;
};

nlohmann::json ci_record(const std::vector<std::string>& argv, const CIInputs& in,
                         const std::vector<CIEigenstate>& levels);
void write_ci_csv(std::ostream& os, const std::vector<CIEigenstate>& levels);

}  // namespace contactwell
