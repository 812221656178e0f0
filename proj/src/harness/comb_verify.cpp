#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "ifl/combinatorics/binomial_identity.hpp"
#include "ifl/combinatorics/partition.hpp"
#include "ifl/combinatorics/tables.hpp"
#include "ifl/dynamics/trajectory.hpp"
#include "ifl/harness/experiments.hpp"
#include "ifl/harness/output.hpp"

namespace ifl {

namespace {

std::string verdict(bool applicable, bool ok) { return applicable ? (ok ? "true" : "false") : "not-applicable"; }

std::string table_name(const CardinalityTable& t) {
  std::string name = to_string(t.kind);
  if (!t.sites.empty()) {
    name += "(";
    for (std::size_t i = 0; i < t.sites.size(); ++i) name += (i ? "," : "") + std::to_string(t.sites[i]);
    name += ")";
  }
  return name;
}

void table_records(const CardinalityTable& t, std::vector<CombRecord>& out) {
  const bool gated = t.prime_gated();
  const std::string name = table_name(t);
  for (int j = 0; j < t.rows(); ++j) {
    const BigInt total = t.row_total(j);
    const double reference = to_double(total) / t.p;
    for (int k : t.odd_classes()) {
      const BigInt& c = t.counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      const BigRational diff = BigRational(c) - BigRational(total, BigInt(t.p));
      const bool ok = abs(diff) <= BigRational(t.bound());
      CombRecord r{name, t.p, k, std::nullopt, c.str(), reference, static_cast<double>(t.bound()), verdict(gated, ok)};
      if (t.kind != TableKind::alpha) r.j = j;
      out.push_back(std::move(r));
    }
    BigInt sum = 0;
    for (const auto& c : t.counts[static_cast<std::size_t>(j)]) sum += c;
    CombRecord r{name + "_row_total", t.p, std::nullopt, std::nullopt, sum.str(), to_double(total), 0.0,
                 verdict(true, sum == total)};
    if (t.kind != TableKind::alpha) r.j = j;
    out.push_back(std::move(r));
  }
}

void brute_records(const CardinalityTable& dp, std::vector<CombRecord>& out) {
  const auto brute = brute_force_table(dp.p, dp.sites);
  const std::string name = table_name(dp) + "_brute";
  for (int j = 0; j < dp.rows(); ++j) {
    for (int k = 0; k < 2 * dp.p; ++k) {
      const auto& a = dp.counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      const auto& b = brute.counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      CombRecord r{name, dp.p, k, std::nullopt, b.str(), to_double(a), 0.0, verdict(true, a == b)};
      if (dp.kind != TableKind::alpha) r.j = j;
      out.push_back(std::move(r));
    }
  }
}

bool sites_fit(const std::vector<int>& sites, int p) {
  return std::all_of(sites.begin(), sites.end(), [p](int s) { return s >= 1 && s <= 2 * p; });
}

}  // namespace

CombResult run_comb_verify(const ExperimentConfig& cfg) {
  for (int p : cfg.primes) {
    if (p < 2) throw UsageError("comb.primes entries must be at least 2");
    if (!is_prime(p) && !cfg.explore) {
      throw HypothesisError("p=" + std::to_string(p) +
                            " is not prime; the cardinality bounds are proved for prime p only (use --explore)");
    }
  }
  CombResult result;
  auto& out = result.records;
  for (int p : cfg.primes) {
    const auto alpha = alpha_table(p);
    table_records(alpha, out);
    if (p <= 7) brute_records(alpha, out);
    for (const auto& s : cfg.beta_sites) {
      if (s.size() != 2 || !sites_fit(s, p)) continue;
      const auto t = beta_table(p, s[0], s[1]);
      table_records(t, out);
      if (p <= 7) brute_records(t, out);
    }
    for (const auto& s : cfg.gamma_sites) {
      if (s.size() != 4 || !sites_fit(s, p)) continue;
      const auto t = gamma4_table(p, s[0], s[1], s[2], s[3]);
      table_records(t, out);
      if (p <= 7) brute_records(t, out);
    }
  }

  if (!cfg.partition_primes.empty()) {
    const int largest = *std::max_element(cfg.partition_primes.begin(), cfg.partition_primes.end());
    double previous = -1;
    for (int p : cfg.partition_primes) {
      const auto pf = partition_function(2 * p, cfg.partition_gamma);
      const double dev = std::abs(pf.normalized - 1.0);
      // the limit statement is checked at the largest p and for monotone approach beyond p = 7
      bool ok = true;
      bool applicable = false;
      if (p > 7 && previous >= 0) {
        applicable = true;
        ok = dev <= previous;
      }
      if (p == largest) {
        applicable = true;
        ok = ok && dev <= 0.05;
      }
      if (p >= 7) previous = dev;
      out.push_back({"partition_normalized", p, std::nullopt, std::nullopt, format_double(pf.normalized), 1.0, 0.05,
                     verdict(applicable, ok)});
      out.push_back({"partition_normalized_positive", p, std::nullopt, std::nullopt,
                     format_double(pf.normalized_positive), 1.0, 0.05, "not-applicable"});
      out.push_back({"partition_bound", p, std::nullopt, std::nullopt, format_double(pf.z), 0.0, 2.0,
                     verdict(p >= 13, pf.inverse_bound_holds)});
    }
  }

  for (int n = 1; n <= cfg.binom_max; ++n) {
    for (int m = 1; m <= n; ++m) {
      const auto id = binom_identity(n, m);
      out.push_back({"binomial", n, m, std::nullopt, id.lhs.str(), id.rhs.convert_to<double>(), 0.0,
                     verdict(true, id.lhs == id.rhs)});
    }
  }
  result.all_pass = std::none_of(out.begin(), out.end(), [](const CombRecord& r) { return r.pass == "false"; });
  return result;
}

std::vector<std::string> write_comb_verify(const CombResult& result, const ExperimentConfig& cfg) {
  std::string text;
  for (const auto& r : result.records) {
    nlohmann::ordered_json j;
    j["theorem"] = r.theorem;
    j["p"] = r.p;
    j["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
    j["j"] = r.j ? nlohmann::ordered_json(*r.j) : nlohmann::ordered_json(nullptr);
    j["count"] = r.count;
    j["reference_value"] = r.reference_value;
    j["bound"] = r.bound;
    j["pass"] = r.pass;
    text += j.dump() + "\n";
  }
  const auto path = output_path(cfg.out_dir, "comb_verify.jsonl");
  write_atomic(path, text);
  return {path};
}

}  // namespace ifl
