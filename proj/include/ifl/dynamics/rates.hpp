#pragma once

#include <utility>

namespace ifl {

/// Flip probabilities p_down(s) = (1 + s tanh(N^-gamma))/2, p_up(s) = 1 - p_down(s).
struct RateParams {
  int n = 0;
  double gamma = 1.0;
  double tanh_term = 0.0;

  static RateParams make(int n, double gamma);
  /// The symmetric corner flip (tanh term forced to zero).
  static RateParams symmetric(int n);

  double p_down(int s) const { return 0.5 + 0.5 * s * tanh_term; }
  double p_up(int s) const { return 0.5 - 0.5 * s * tanh_term; }
};

std::pair<double, double> rates_for_sign(const RateParams& params, int s);

}  // namespace ifl
