#include "ifl/combinatorics/subset_dp.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ifl {

namespace {

int mod(long long a, int m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::vector<int> classify_positions(int n, const std::vector<int>& fixed_in, const std::vector<int>& fixed_out) {
  // 0 free, 1 forced in, 2 forced out
  std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);
  auto mark = [&](const std::vector<int>& v, int tag) {
    for (int x : v) {
      if (x < 1 || x > n) throw std::invalid_argument("subset count: position " + std::to_string(x) + " outside 1..n");
      auto& s = state[static_cast<std::size_t>(x)];
      if (s != 0) throw std::invalid_argument("subset count: position " + std::to_string(x) + " fixed twice");
      s = tag;
    }
  };
  mark(fixed_in, 1);
  mark(fixed_out, 2);
  return state;
}

}  // namespace

std::vector<BigInt> subset_count_dp(int n, int size, int modulus, const std::vector<int>& fixed_in,
                                    const std::vector<int>& fixed_out) {
  if (n < 0 || size < 0 || size > n || modulus < 1) throw std::invalid_argument("subset count: bad arguments");
  const auto state = classify_positions(n, fixed_in, fixed_out);
  const auto m = static_cast<std::size_t>(modulus);
  // dp[c * m + r]
  std::vector<BigInt> dp((static_cast<std::size_t>(size) + 1) * m);
  dp[0] = 1;
  int reachable = 0;
  for (int x = 1; x <= n; ++x) {
    const int st = state[static_cast<std::size_t>(x)];
    if (st == 2) continue;
    const int shift = x % modulus;
    const int top = std::min(size, reachable + 1);
    if (st == 1) {
      // element is forced: every partial subset must take it
      for (int c = top; c >= 0; --c) {
        for (std::size_t r = 0; r < m; ++r) {
          auto& cell = dp[static_cast<std::size_t>(c) * m + r];
          cell = c > 0 ? dp[static_cast<std::size_t>(c - 1) * m + static_cast<std::size_t>(mod(static_cast<long long>(r) - shift, modulus))]
                       : BigInt(0);
        }
      }
    } else {
      for (int c = top; c >= 1; --c) {
        for (std::size_t r = 0; r < m; ++r) {
          const auto from = static_cast<std::size_t>(mod(static_cast<long long>(r) - shift, modulus));
          dp[static_cast<std::size_t>(c) * m + r] += dp[static_cast<std::size_t>(c - 1) * m + from];
        }
      }
    }
    reachable = top;
  }
  return {dp.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(size) * m), dp.end()};
}

std::vector<BigInt> subset_count_brute(int n, int size, int modulus, const std::vector<int>& fixed_in,
                                       const std::vector<int>& fixed_out) {
  if (n > 30) throw std::invalid_argument("subset count brute force: n too large");
  const auto state = classify_positions(n, fixed_in, fixed_out);
  std::vector<BigInt> out(static_cast<std::size_t>(modulus));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != size) continue;
    bool ok = true;
    long long sum = 0;
    for (int x = 1; x <= n && ok; ++x) {
      const bool in = (mask >> (x - 1)) & 1U;
      const int st = state[static_cast<std::size_t>(x)];
      if ((st == 1 && !in) || (st == 2 && in)) ok = false;
      if (in) sum += x;
    }
    if (ok) out[static_cast<std::size_t>(sum % modulus)] += 1;
  }
  return out;
}

int hole_residue_for_class(int p, int k) {
  const int n = 2 * p;
  k = mod(k, n);
  if ((p - k) % 2 != 0) return -1;
  return mod((p - k) / 2, p);
}

std::vector<BigInt> integral_class_counts(int n, const std::vector<int>& minus_positions,
                                          const std::vector<int>& plus_positions) {
  if (n <= 0 || n % 2) throw std::invalid_argument("integral class counts: N must be even");
  const int p = n / 2;
  const auto by_hole = subset_count_dp(n, p, p, minus_positions, plus_positions);
  std::vector<BigInt> out(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const int h = hole_residue_for_class(p, slope_class_for_integral_residue(n, r));
    if (h >= 0) out[static_cast<std::size_t>(r)] = by_hole[static_cast<std::size_t>(h)];
  }
  return out;
}

SuffixCountTable::SuffixCountTable(int n) : n_(n), p_(n / 2) {
  if (n <= 0 || n % 2) throw std::invalid_argument("suffix table: N must be even");
  if (binomial(n, p_) >= (BigInt(1) << 255)) {
    throw std::invalid_argument("suffix table: C(N, N/2) exceeds 256-bit counts (N=" + std::to_string(n) + ")");
  }
  table_.assign(static_cast<std::size_t>(n + 2) * static_cast<std::size_t>(p_ + 1) * static_cast<std::size_t>(p_), Count(0));
  at(n + 1, 0, 0) = 1;
  for (int i = n; i >= 1; --i) {
    const int remaining = n - i + 1;
    for (int c = 0; c <= std::min(p_, remaining); ++c) {
      for (int s = 0; s < p_; ++s) {
        Count v = count(i + 1, c, s);
        if (c > 0) v += count(i + 1, c - 1, mod(static_cast<long long>(s) - i, p_));
        at(i, c, s) = v;
      }
    }
  }
}

int SuffixCountTable::hole_target(int r) const {
  return hole_residue_for_class(p_, slope_class_for_integral_residue(n_, mod(r, n_)));
}

SuffixCountTable::Count SuffixCountTable::class_size(int r) const {
  const int h = hole_target(r);
  return h < 0 ? Count(0) : count(1, p_, h);
}

std::vector<std::uint8_t> SuffixCountTable::unrank(int r, Count rank) const {
  const int h = hole_target(r);
  if (h < 0 || rank >= count(1, p_, h)) throw std::out_of_range("suffix table: rank outside class");
  std::vector<std::uint8_t> xi(static_cast<std::size_t>(n_), 1);
  int c = p_;
  int s = h;
  for (int i = 1; i <= n_; ++i) {
    if (c == 0) break;
    const int next_s = mod(static_cast<long long>(s) - i, p_);
    const Count& take = count(i + 1, c - 1, next_s);
    if (rank < take) {
      xi[static_cast<std::size_t>(i % n_)] = 0;
      --c;
      s = next_s;
    } else {
      rank -= take;
    }
  }
  return xi;
}

}  // namespace ifl
