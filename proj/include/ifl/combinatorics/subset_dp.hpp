#pragma once

#include <cstdint>
#include <vector>

#include "ifl/combinatorics/bigint.hpp"

namespace ifl {

/// Number of `size`-element subsets of {1..n} that contain `fixed_in`, avoid
/// `fixed_out`, and have element sum congruent to r mod `modulus`, for each r.
std::vector<BigInt> subset_count_dp(int n, int size, int modulus, const std::vector<int>& fixed_in = {},
                                    const std::vector<int>& fixed_out = {});

/// Same counts by direct enumeration (intended for n <= 20).
std::vector<BigInt> subset_count_brute(int n, int size, int modulus, const std::vector<int>& fixed_in = {},
                                       const std::vector<int>& fixed_out = {});

// Residue bookkeeping for balanced +-1 sequences s_1..s_{2p}.
//
// With H the sum of the positions of the -1 entries,
//   sum_i i s_i = p(2p+1) - 2H,
// so sum_i i s_i = k (mod 2p)  <=>  H = (p-k)/2 (mod p), which needs k = p (mod 2).
// The integral of the height function with anchor 0 is Y = -sum_i i s_i.

/// Residue of H mod p selecting the class sum_i i s_i = k (mod 2p); -1 when the class is empty by parity.
int hole_residue_for_class(int p, int k);

/// Class k (mod 2p) of sum_i i s_i for configurations whose anchor-0 integral is r (mod 2p).
inline int slope_class_for_integral_residue(int n, int r) { return ((n - r) % n + n) % n; }

/// Number of balanced sequences of length N = 2p with anchor-0 integral = r (mod N), for r = 0..N-1.
std::vector<BigInt> integral_class_counts(int n, const std::vector<int>& minus_positions = {},
                                          const std::vector<int>& plus_positions = {});

/// Exact suffix counts used to draw a uniform balanced sequence inside a residue class.
///
/// count(i, c, s) is the number of ways to pick c of the positions i..N as -1
/// entries with position sum = s (mod p). Stored with 256-bit integers.
class SuffixCountTable {
 public:
  using Count = boost::multiprecision::uint256_t;

  explicit SuffixCountTable(int n);

  int size() const { return n_; }
  const Count& count(int i, int c, int s) const {
    return table_[(static_cast<std::size_t>(i) * (p_ + 1) + static_cast<std::size_t>(c)) * p_ + static_cast<std::size_t>(s)];
  }
  /// Number of balanced sequences with anchor-0 integral = r (mod N).
  Count class_size(int r) const;
  /// The balanced sequence of rank `rank` (0-based) in class r, as site-indexed slope bits.
  std::vector<std::uint8_t> unrank(int r, Count rank) const;

 private:
  Count& at(int i, int c, int s) {
    return table_[(static_cast<std::size_t>(i) * (p_ + 1) + static_cast<std::size_t>(c)) * p_ + static_cast<std::size_t>(s)];
  }
  int hole_target(int r) const;

  int n_;
  int p_;
  std::vector<Count> table_;
};

}  // namespace ifl
