#include "ifl/pde/heat_reference.hpp"

#include <cmath>
#include <numbers>

namespace ifl {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

double FourierProfile::operator()(double u) const {
  double v = mean;
  for (const auto& md : modes) {
    v += md.cos_amp * std::cos(two_pi * md.k * u) + md.sin_amp * std::sin(two_pi * md.k * u);
  }
  return v;
}

double FourierProfile::height_increment(double u) const {
  double v = (2.0 * mean - 1.0) * u;
  for (const auto& md : modes) {
    const double w = two_pi * md.k;
    v += 2.0 * (md.cos_amp * std::sin(w * u) / w + md.sin_amp * (1.0 - std::cos(w * u)) / w);
  }
  return v;
}

double FourierProfile::height_increment_mean() const {
  double v = (2.0 * mean - 1.0) / 2.0;
  for (const auto& md : modes) v += 2.0 * md.sin_amp / (two_pi * md.k);
  return v;
}

std::vector<double> FourierProfile::grid(int m) const {
  std::vector<double> g(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) g[static_cast<std::size_t>(i)] = (*this)(static_cast<double>(i) / m);
  return g;
}

FourierProfile heat_reference(const FourierProfile& rho0, double t) {
  FourierProfile out = rho0;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  for (auto& md : out.modes) {
    const double decay = std::exp(-2.0 * pi2 * md.k * md.k * t);
    md.cos_amp *= decay;
    md.sin_amp *= decay;
  }
  return out;
}

std::vector<double> heat_reference_grid(const FourierProfile& rho0, double t, int m) {
  return heat_reference(rho0, t).grid(m);
}

}  // namespace ifl
