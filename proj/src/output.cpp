#include "contactwell/output.hpp"

#include <cstdio>
#include <ostream>

namespace contactwell {

std::string format_number(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  return buf;
}

namespace {

nlohmann::json complex_json(cdouble z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

nlohmann::json solve_record(const std::vector<std::string>& argv, const SolveInputs& in, const Solution& sol) {
  nlohmann::json rec;
  rec["schema_version"] = kSchemaVersion;
  rec["command"] = "solve";
  rec["arguments"] = argv;
  rec["inputs"] = {{"U", in.U}, {"n", in.n}, {"m", in.m}, {"tol", in.tol}, {"basis", in.basis}};
  rec["results"] = {{"k1", complex_json(sol.pair.k1)},
                    {"k2", complex_json(sol.pair.k2)},
                    {"energy", sol.pair.energy().real()},
                    {"residual_norm", sol.residual_norm},
                    {"iterations", sol.iterations},
                    {"case_sign", sol.pair.equation.s}};
  return rec;
}

void write_solve_csv(std::ostream& os, const SolveInputs& in, const Solution& sol) {
  const auto& p = sol.pair;
  os << "U,n,m,s,re_k1,im_k1,re_k2,im_k2,E,residual,iterations\n";
  os << format_number(in.U) << ',' << in.n << ',' << in.m << ',' << p.equation.s << ','
     << format_number(p.k1.real()) << ',' << format_number(p.k1.imag()) << ',' << format_number(p.k2.real())
     << ',' << format_number(p.k2.imag()) << ',' << format_number(p.energy().real()) << ','
     << format_number(sol.residual_norm) << ',' << sol.iterations << '\n';
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << "U,re_k1,im_k1,re_k2,im_k2,E,residual\n";
  for (const auto& pt : result.points) {
    os << format_number(pt.U);
    if (pt.solution) {
      const auto& p = pt.solution->pair;
      os << ',' << format_number(p.k1.real()) << ',' << format_number(p.k1.imag()) << ','
         << format_number(p.k2.real()) << ',' << format_number(p.k2.imag()) << ','
         << format_number(pt.energy()) << ',' << format_number(pt.solution->residual_norm);
    } else {
      os << ",,,,,,";
    }
    os << '\n';
  }
}

void write_density_csv(std::ostream& os, const DensityGrid& grid) {
  os << "x1,x2,density\n";
  os << "# symmetry=" << grid.symmetry << '\n';
  os << "# U=" << format_number(grid.U, 17) << '\n';
  os << "# n=" << grid.label.n() << '\n';
  os << "# m=" << grid.label.m() << '\n';
  os << "# k1=" << format_number(grid.k1.real(), 17) << (grid.k1.imag() < 0 ? "" : "+")
     << format_number(grid.k1.imag(), 17) << "i\n";
  os << "# k2=" << format_number(grid.k2.real(), 17) << (grid.k2.imag() < 0 ? "" : "+")
     << format_number(grid.k2.imag(), 17) << "i\n";
  if (grid.symmetry == "singlet") os << "# s=" << grid.s << '\n';
  os << "# norm=" << format_number(grid.norm, 17) << '\n';
  os << "# resolution=" << grid.resolution << '\n';
  for (int i = 0; i < grid.resolution; ++i)
    for (int j = 0; j < grid.resolution; ++j)
      os << format_number(grid.coordinate(i)) << ',' << format_number(grid.coordinate(j)) << ','
         << format_number(grid.values(i, j)) << '\n';
}

nlohmann::json ci_record(const std::vector<std::string>& argv, const CIInputs& in,
                         const std::vector<CIEigenstate>& levels) {
  nlohmann::json rec;
  rec["schema_version"] = kSchemaVersion;
  rec["command"] = "ci";
  rec["arguments"] = argv;
  rec["inputs"] = {{"U", in.U}, {"basis", in.basis}, {"levels", in.levels}};
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& st = levels[i];
    rows.push_back({{"level", i},
                    {"energy", st.energy},
                    {"n", st.dominant_label.n()},
                    {"m", st.dominant_label.m()},
                    {"leading_coefficient", st.leading_coefficient}});
  }
  rec["results"] = {{"levels", rows}};
  return rec;
}

void write_ci_csv(std::ostream& os, const std::vector<CIEigenstate>& levels) {
  os << "level,energy,n,m,leading_coefficient\n";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& st = levels[i];
    os << i << ',' << format_number(st.energy) << ',' << st.dominant_label.n() << ',' << st.dominant_label.m()
       << ',' << format_number(st.leading_coefficient) << '\n';
  }
}

}  // namespace contactwell
