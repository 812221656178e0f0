#pragma once

#include <vector>

#include "ifl/combinatorics/bigint.hpp"

namespace ifl {

/// Anchor-summed weights of e^{-|Y|/N^gamma} over Y = r + aN, a in Z, split by the sign of Y.
struct ResidueWeights {
  double plus = 0.0;
  double minus = 0.0;
  double zero = 0.0;
  double total() const { return plus + minus + zero; }
};

ResidueWeights residue_weights(int n, double gamma, int r);

struct PartitionFunction {
  int n = 0;
  double gamma = 0.0;
  double z = 0.0;
  double log_z = 0.0;
  /// N^{1-gamma} C(N,N/2)^{-1} Z
  double normalized = 0.0;
  /// The same with only the configurations of positive integral.
  double normalized_positive = 0.0;
  /// Z^{-1} <= 2 N^{1-gamma} C(N,N/2)^{-1}
  bool inverse_bound_holds = false;
};

/// Z_{N,gamma} = sum over all height functions of e^{-|Y|/N^gamma}, tails in closed form.
PartitionFunction partition_function(int n, double gamma);
/// Same, from precomputed integral class counts (index r = Y mod N).
PartitionFunction partition_function(int n, double gamma, const std::vector<BigInt>& class_counts);

}  // namespace ifl
