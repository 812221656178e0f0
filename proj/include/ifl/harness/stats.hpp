#pragma once

#include <string>
#include <vector>

namespace ifl {

struct Summary {
  int count = 0;
  double mean = 0.0;
  double variance = 0.0;      // unbiased
  double mean_stderr = 0.0;
  double variance_stderr = 0.0;
};

Summary summarize(const std::vector<double>& values);

/// pass <=> |value - theory| <= max(abs_tol, z * stderr)
struct StatRecord {
  std::string name;
  double value = 0.0;
  double stderr_ = 0.0;
  int replicas = 0;
  double theory = 0.0;
  double abs_tol = 0.0;
  double z = 3.0;
  bool pass = false;
};

StatRecord make_record(std::string name, double value, double stderr_, int replicas, double theory, double abs_tol,
                       double z);

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Goodness of fit of observed counts against expected probabilities. Cells
/// with expected count below `min_expected` are pooled into one cell.
ChiSquare chi_square_gof(const std::vector<double>& observed, const std::vector<double>& probabilities,
                         double min_expected = 5.0);
/// Homogeneity of two samples of counts over the same cells (pooled the same way).
ChiSquare chi_square_two_sample(const std::vector<double>& a, const std::vector<double>& b, double min_expected = 5.0);

}  // namespace ifl
