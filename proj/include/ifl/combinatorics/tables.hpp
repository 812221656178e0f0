#pragma once

#include <string>
#include <vector>

#include "ifl/combinatorics/bigint.hpp"

namespace ifl {

enum class TableKind { alpha, beta, gamma4 };

std::string to_string(TableKind kind);

/// Counts of balanced +-1 sequences of length 2p by class k of sum_i i s_i (mod 2p).
///
/// Row j fixes j of the distinguished positions (the first j of them) to +1 and
/// the others to -1. For alpha there are no distinguished positions and one row.
struct CardinalityTable {
  int p = 0;
  TableKind kind = TableKind::alpha;
  std::vector<int> sites;
  /// counts[j][k] for k = 0..2p-1 (entries with k of the wrong parity are zero).
  std::vector<std::vector<BigInt>> counts;

  int rows() const { return static_cast<int>(counts.size()); }
  /// Odd classes k = 1, 3, ..., 2p-1 (the classes the bounds are stated for).
  std::vector<int> odd_classes() const;
  /// C(2p - d, p - j) with d the number of distinguished positions.
  BigInt row_total(int j) const;
  /// The bound constant: 2, p, p^3 for alpha, beta, gamma4.
  long long bound() const;
  /// max over odd k of |count - row_total/p| (exact rational converted to double).
  double max_deviation(int j) const;
  bool prime_gated() const { return is_prime(p); }
};

CardinalityTable alpha_table(int p);
CardinalityTable beta_table(int p, int x1, int x2);
CardinalityTable gamma4_table(int p, int x1, int x2, int x3, int x4);
/// General form: `positions` are the distinguished positions in 1..2p.
CardinalityTable constrained_table(int p, const std::vector<int>& positions);

/// Same tables by brute-force enumeration of balanced sequences (2p <= 20).
CardinalityTable brute_force_table(int p, const std::vector<int>& positions);

}  // namespace ifl
