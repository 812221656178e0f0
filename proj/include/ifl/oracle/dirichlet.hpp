#pragma once

#include <functional>

#include "ifl/core/height_config.hpp"

namespace ifl {

struct DirichletResult {
  double dirichlet = 0.0;  // -<L f, f>
  double carre = 0.0;      // (1/2) sum_x E[c_x (f(h^x) - f(h))^2]
};

/// Both forms under mu*_N for a function of the slopes only (N <= 10).
/// Throws ValidationError if f changes under an anchor shift.
DirichletResult dirichlet_identity(int n, double gamma, const std::function<double(const HeightConfig&)>& f);

}  // namespace ifl
