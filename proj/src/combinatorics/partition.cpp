#include "ifl/combinatorics/partition.hpp"

#include <cmath>
#include <stdexcept>

#include "ifl/combinatorics/subset_dp.hpp"

namespace ifl {

ResidueWeights residue_weights(int n, double gamma, int r) {
  const double lambda = std::pow(static_cast<double>(n), -gamma);
  const double q = std::exp(-lambda * n);
  const double one_minus_q = -std::expm1(-lambda * n);
  r = ((r % n) + n) % n;
  ResidueWeights w;
  if (r == 0) {
    w.zero = 1.0;
    w.plus = q / one_minus_q;
    w.minus = w.plus;
  } else {
    w.plus = std::exp(-lambda * r) / one_minus_q;
    w.minus = std::exp(-lambda * (n - r)) / one_minus_q;
  }
  return w;
}

PartitionFunction partition_function(int n, double gamma, const std::vector<BigInt>& class_counts) {
  if (static_cast<int>(class_counts.size()) != n) throw std::invalid_argument("partition function: class count size");
  const BigInt central = binomial(n, n / 2);
  double ratio = 0.0;
  double ratio_plus = 0.0;
  for (int r = 0; r < n; ++r) {
    const auto& c = class_counts[static_cast<std::size_t>(r)];
    if (c == 0) continue;
    const double share = BigRational(c, central).convert_to<double>();
    const auto w = residue_weights(n, gamma, r);
    ratio += share * w.total();
    ratio_plus += share * w.plus;
  }
  PartitionFunction out;
  out.n = n;
  out.gamma = gamma;
  const double scale = std::pow(static_cast<double>(n), 1.0 - gamma);
  out.log_z = std::log(to_double(central)) + std::log(ratio);
  out.z = to_double(central) * ratio;
  out.normalized = scale * ratio;
  out.normalized_positive = scale * ratio_plus;
  out.inverse_bound_holds = 1.0 / ratio <= 2.0 * scale;
  return out;
}

PartitionFunction partition_function(int n, double gamma) {
  if (n <= 0 || n % 2) throw std::invalid_argument("partition function: N must be even");
  if (gamma <= 0) throw std::invalid_argument("partition function: gamma must be positive");
  return partition_function(n, gamma, integral_class_counts(n));
}

}  // namespace ifl
