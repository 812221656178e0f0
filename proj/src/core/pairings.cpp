#include "ifl/core/pairings.hpp"

#include <cmath>
#include <string>

namespace ifl {

double pairing_density(const HeightConfig& config, const TestFunction& phi) {
  const int n = config.size();
  const auto xi = config.site_slopes();
  double acc = 0.0;
  for (int x = 0; x < n; ++x) {
    if (xi[static_cast<std::size_t>(x)]) acc += phi(static_cast<double>(x) / n);
  }
  return acc / n;
}

double pairing_fluctuation(const HeightConfig& config, const TestFunction& phi) {
  const int n = config.size();
  const auto xi = config.site_slopes();
  double acc = 0.0;
  for (int x = 0; x < n; ++x) {
    const double centered = xi[static_cast<std::size_t>(x)] ? 0.5 : -0.5;
    acc += centered * phi(static_cast<double>(x) / n);
  }
  return acc / std::sqrt(static_cast<double>(n));
}

double block_average(const HeightConfig& config, Site x, int l, BlockSide side) {
  const int n = config.size();
  if (l < 1 || l > n - 1) {
    throw ValidationError("block_average: block length " + std::to_string(l) + " outside [1, N-1]");
  }
  int count = 0;
  for (int j = 1; j <= l; ++j) count += config.slope(side == BlockSide::right ? x + j : x - j);
  return static_cast<double>(count) / l;
}

}  // namespace ifl
