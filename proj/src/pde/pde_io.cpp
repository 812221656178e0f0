#include "ifl/pde/pde_io.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace ifl {

namespace {
std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace

void write_pde_csv(std::ostream& out, const PdeTrajectory& traj, int stride) {
  if (stride < 1) stride = 1;
  out << "t,Y,absorbed";
  for (int i = 0; i < traj.m; i += stride) out << ",rho_" << i;
  out << '\n';
  for (const auto& s : traj.states) {
    out << g17(s.t) << ',' << g17(s.y) << ',' << (s.absorbed ? 1 : 0);
    for (int i = 0; i < traj.m; i += stride) out << ',' << g17(s.rho[static_cast<std::size_t>(i)]);
    out << '\n';
  }
}

std::string pde_summary_json(const PdeTrajectory& traj) {
  nlohmann::json j;
  j["tau0"] = traj.tau0 ? nlohmann::json(*traj.tau0) : nlohmann::json(nullptr);
  j["Y0"] = traj.y0;
  j["M"] = traj.m;
  j["dt_safety"] = traj.dt_safety;
  return j.dump();
}

}  // namespace ifl
