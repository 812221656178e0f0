#pragma once

#include <iosfwd>
#include <string>

#include "ifl/pde/coupled_solver.hpp"

namespace ifl {

/// `t,Y,absorbed,rho_0,...` keeping every `stride`-th grid column.
void write_pde_csv(std::ostream& out, const PdeTrajectory& traj, int stride = 1);
/// {tau0, Y0, M, dt_safety}; tau0 is null when Y never reaches 0.
std::string pde_summary_json(const PdeTrajectory& traj);

}  // namespace ifl
