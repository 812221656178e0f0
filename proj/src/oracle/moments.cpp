#include "ifl/oracle/moments.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ifl/combinatorics/subset_dp.hpp"

namespace ifl {

namespace {

void validate(const ExactMeasure& measure, const MomentQuery& q) {
  if (q.n != measure.size()) throw ValidationError("moment: query N differs from the measure");
  std::set<Site> seen;
  for (Site x : q.sites) {
    if (x < 0 || x >= q.n) throw ValidationError("moment: site " + std::to_string(x) + " outside the torus");
    if (!seen.insert(x).second) throw ValidationError("moment: duplicate site " + std::to_string(x));
  }
  if (static_cast<int>(q.sites.size()) > q.n) throw ValidationError("moment: too many sites");
}

double weigh(const ExactMeasure& measure, const std::vector<std::int64_t>& counts, Restriction restriction,
             std::size_t k) {
  double acc = 0.0;
  for (int r = 0; r < measure.size(); ++r) {
    const auto c = counts[static_cast<std::size_t>(r)];
    if (c != 0) acc += static_cast<double>(c) * measure.restricted_weight(r, restriction);
  }
  return std::ldexp(acc / measure.z(), -static_cast<int>(k));
}

}  // namespace

MomentResult moment(const ExactMeasure& measure, const MomentQuery& query) {
  validate(measure, query);
  const int n = measure.size();
  const std::size_t k = query.sites.size();
  std::uint32_t site_mask = 0;
  for (Site x : query.sites) site_mask |= std::uint32_t{1} << x;

  MomentResult out;
  out.signed_counts.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < measure.num_sequences(); ++i) {
    const int holes = static_cast<int>(k) - std::popcount(measure.mask(i) & site_mask);
    out.signed_counts[static_cast<std::size_t>(measure.residue(i))] += (holes % 2) ? -1 : 1;
  }
  out.value = weigh(measure, out.signed_counts, query.restriction, k);

  // cardinality route: one constrained count per +-1 pattern on the sites
  std::vector<BigInt> acc(static_cast<std::size_t>(n));
  for (std::uint32_t pattern = 0; pattern < (std::uint32_t{1} << k); ++pattern) {
    std::vector<int> plus, minus;
    for (std::size_t j = 0; j < k; ++j) {
      const int position = query.sites[j] == 0 ? n : query.sites[j];
      ((pattern >> j) & 1U ? plus : minus).push_back(position);
    }
    const auto counts = integral_class_counts(n, minus, plus);
    const bool negative = minus.size() % 2;
    for (int r = 0; r < n; ++r) {
      if (negative) acc[static_cast<std::size_t>(r)] -= counts[static_cast<std::size_t>(r)];
      else acc[static_cast<std::size_t>(r)] += counts[static_cast<std::size_t>(r)];
    }
  }
  std::vector<std::int64_t> card(static_cast<std::size_t>(n));
  out.counts_match = true;
  for (int r = 0; r < n; ++r) {
    card[static_cast<std::size_t>(r)] = acc[static_cast<std::size_t>(r)].convert_to<std::int64_t>();
    if (card[static_cast<std::size_t>(r)] != out.signed_counts[static_cast<std::size_t>(r)]) out.counts_match = false;
  }
  out.value_cardinality = weigh(measure, card, query.restriction, k);
  const double scale = std::max(std::abs(out.value), std::abs(out.value_cardinality));
  if (!out.counts_match || std::abs(out.value - out.value_cardinality) > 1e-12 * scale) {
    throw std::logic_error("moment: enumeration and cardinality routes disagree");
  }
  return out;
}

MomentResult moment(const MomentQuery& query) {
  const ExactMeasure measure(query.n, query.gamma);
  return moment(measure, query);
}

MomentResult restricted_moment(const ExactMeasure& measure, const MomentQuery& query) {
  return moment(measure, query);
}

std::vector<double> two_point_function(const ExactMeasure& measure) {
  const int n = measure.size();
  std::vector<double> c(static_cast<std::size_t>(n));
  c[0] = 0.25;
  for (int d = 1; d < n; ++d) c[static_cast<std::size_t>(d)] = moment(measure, {n, measure.gamma(), {0, d}}).value;
  return c;
}

double fluct_variance_exact(const ExactMeasure& measure, const TestFunction& phi) {
  const int n = measure.size();
  const auto c = two_point_function(measure);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) v[static_cast<std::size_t>(x)] = phi(static_cast<double>(x) / n);
  // sum_x xibar(x) = 0, so centering phi leaves U unchanged and makes constants vanish exactly
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  for (auto& e : v) e -= mean;
  double acc = 0.0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      acc += c[static_cast<std::size_t>(((y - x) % n + n) % n)] * v[static_cast<std::size_t>(x)] * v[static_cast<std::size_t>(y)];
    }
  }
  return acc / n;
}

double fluct_variance_exact(int n, double gamma, const TestFunction& phi) {
  const ExactMeasure measure(n, gamma);
  return fluct_variance_exact(measure, phi);
}

}  // namespace ifl
