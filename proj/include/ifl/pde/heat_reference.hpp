#pragma once

#include <string>
#include <vector>

namespace ifl {

/// rho(u) = mean + sum_k [a_k cos(2 pi k u) + b_k sin(2 pi k u)]
struct FourierProfile {
  struct Mode {
    int k = 1;
    double cos_amp = 0.0;
    double sin_amp = 0.0;
  };
  double mean = 0.5;
  std::vector<Mode> modes;

  double operator()(double u) const;
  /// Antiderivative of (2 rho - 1) vanishing at 0; requires mean = 1/2 for periodicity.
  double height_increment(double u) const;
  /// Integral over [0,1) of height_increment.
  double height_increment_mean() const;
  std::vector<double> grid(int m) const;
};

/// Exact solution of d_t rho = (1/2) rho'' at time t (mode k decays by e^{-2 pi^2 k^2 t}).
FourierProfile heat_reference(const FourierProfile& rho0, double t);
std::vector<double> heat_reference_grid(const FourierProfile& rho0, double t, int m);

}  // namespace ifl
