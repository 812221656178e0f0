#include "ifl/combinatorics/tables.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ifl/combinatorics/subset_dp.hpp"

namespace ifl {

std::string to_string(TableKind kind) {
  switch (kind) {
    case TableKind::alpha:
      return "alpha";
    case TableKind::beta:
      return "beta";
    case TableKind::gamma4:
      return "gamma4";
  }
  return "?";
}

std::vector<int> CardinalityTable::odd_classes() const {
  std::vector<int> ks;
  for (int k = 1; k < 2 * p; k += 2) ks.push_back(k);
  return ks;
}

BigInt CardinalityTable::row_total(int j) const {
  return binomial(2 * p - static_cast<int>(sites.size()), p - j);
}

long long CardinalityTable::bound() const {
  switch (kind) {
    case TableKind::alpha:
      return 2;
    case TableKind::beta:
      return p;
    case TableKind::gamma4:
      return static_cast<long long>(p) * p * p;
  }
  return 0;
}

double CardinalityTable::max_deviation(int j) const {
  const BigInt total = row_total(j);
  double worst = 0.0;
  for (int k : odd_classes()) {
    const BigRational dev = BigRational(counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]) -
                            BigRational(total, BigInt(p));
    worst = std::max(worst, std::abs(dev.convert_to<double>()));
  }
  return worst;
}

namespace {

TableKind kind_for(std::size_t distinguished) {
  switch (distinguished) {
    case 0:
      return TableKind::alpha;
    case 2:
      return TableKind::beta;
    case 4:
      return TableKind::gamma4;
  }
  throw std::invalid_argument("cardinality table: need 0, 2 or 4 distinguished positions");
}

void check_positions(int p, const std::vector<int>& positions) {
  if (p < 1) throw std::invalid_argument("cardinality table: p must be positive");
  std::set<int> seen;
  for (int x : positions) {
    if (x < 1 || x > 2 * p) throw std::invalid_argument("cardinality table: site outside 1..2p");
    if (!seen.insert(x).second) throw std::invalid_argument("cardinality table: duplicate site " + std::to_string(x));
  }
}

}  // namespace

CardinalityTable constrained_table(int p, const std::vector<int>& positions) {
  check_positions(p, positions);
  CardinalityTable t;
  t.p = p;
  t.kind = kind_for(positions.size());
  t.sites = positions;
  const int d = static_cast<int>(positions.size());
  for (int j = 0; j <= d; ++j) {
    const std::vector<int> plus(positions.begin(), positions.begin() + j);
    const std::vector<int> minus(positions.begin() + j, positions.end());
    const auto by_hole = subset_count_dp(2 * p, p, p, minus, plus);
    std::vector<BigInt> row(static_cast<std::size_t>(2 * p));
    for (int k = 0; k < 2 * p; ++k) {
      const int h = hole_residue_for_class(p, k);
      if (h >= 0) row[static_cast<std::size_t>(k)] = by_hole[static_cast<std::size_t>(h)];
    }
    t.counts.push_back(std::move(row));
  }
  return t;
}

CardinalityTable alpha_table(int p) { return constrained_table(p, {}); }
CardinalityTable beta_table(int p, int x1, int x2) { return constrained_table(p, {x1, x2}); }
CardinalityTable gamma4_table(int p, int x1, int x2, int x3, int x4) {
  return constrained_table(p, {x1, x2, x3, x4});
}

CardinalityTable brute_force_table(int p, const std::vector<int>& positions) {
  check_positions(p, positions);
  const int n = 2 * p;
  if (n > 20) throw std::invalid_argument("brute force table: 2p too large");
  CardinalityTable t;
  t.p = p;
  t.kind = kind_for(positions.size());
  t.sites = positions;
  const int d = static_cast<int>(positions.size());
  t.counts.assign(static_cast<std::size_t>(d + 1), std::vector<BigInt>(static_cast<std::size_t>(n)));
  // bit i-1 of mask set  <=>  s_i = +1
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != p) continue;
    long long weighted = 0;
    for (int i = 1; i <= n; ++i) weighted += ((mask >> (i - 1)) & 1U) ? i : -i;
    int j = 0;
    while (j < d && ((mask >> (positions[static_cast<std::size_t>(j)] - 1)) & 1U)) ++j;
    bool row_ok = true;
    for (int q = j; q < d; ++q) {
      if ((mask >> (positions[static_cast<std::size_t>(q)] - 1)) & 1U) row_ok = false;
    }
    if (!row_ok) continue;
    const auto k = static_cast<std::size_t>(((weighted % n) + n) % n);
    t.counts[static_cast<std::size_t>(j)][k] += 1;
  }
  return t;
}

}  // namespace ifl
