#include <doctest.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "ifl/harness/config_file.hpp"
#include "ifl/harness/experiment_config.hpp"
#include "ifl/harness/experiments.hpp"
#include "ifl/harness/output.hpp"
#include "ifl/harness/runs.hpp"
#include "ifl/harness/stats.hpp"

using namespace ifl;
namespace fs = std::filesystem;

namespace {

std::string scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("ifl_harness_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentConfig from_text(Kind kind, const std::string& text) {
  return make_config(kind, ConfigFile::parse(text, known_config_keys()));
}

}  // namespace

TEST_CASE("config file parsing") {
  const auto cfg = ConfigFile::parse("# comment\nseed = 5\n\nhydro.N = 126, 250 # trailing\n", known_config_keys());
  CHECK(cfg.get("seed") == "5");
  CHECK(cfg.get("hydro.N") == "126, 250");
  CHECK_THROWS_WITH_AS(ConfigFile::parse("hydro.bogus = 1\n", known_config_keys()),
                       doctest::Contains("unknown config key 'hydro.bogus' (line 1)"), UsageError);
  CHECK_THROWS_WITH_AS(ConfigFile::parse("seed 5\n", known_config_keys()), doctest::Contains("line 1"), UsageError);
  CHECK_THROWS_AS(cfg.get("fluct.N"), UsageError);
  CHECK(parse_int_list("1, 2,3") == std::vector<int>{1, 2, 3});
  CHECK(parse_double_list("0.25,1") == std::vector<double>{0.25, 1.0});
  CHECK(parse_tuple_list("1:2; 3:4:5") == std::vector<std::vector<int>>{{1, 2}, {3, 4, 5}});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int("12x", "k"), UsageError);
  CHECK_THROWS_AS(parse_double("abc", "k"), UsageError);
}

TEST_CASE("experiment configs merge defaults and file values") {
  const auto h = from_text(Kind::hydro, "hydro.N = 30\nhydro.rho0_cos = 1:0.2\nhydro.rho0_sin = 2:0.1\nseed = 9\n");
  CHECK(h.n_list == std::vector<int>{30});
  CHECK(h.seed == 9);
  REQUIRE(h.rho0.modes.size() == 2);
  CHECK(h.rho0.modes[0].cos_amp == 0.2);
  CHECK(h.rho0.modes[1].sin_amp == 0.1);
  CHECK(h.times == std::vector<double>{0.25, 1.0});
  const auto f = default_config(Kind::fluct);
  CHECK(f.n_list == std::vector<int>{202});
  CHECK(f.replicas == 200);
  CHECK(f.phi_ids.size() == 7);
  const auto c = default_config(Kind::comb_verify);
  CHECK(c.partition_primes.front() == 3);
  CHECK(c.partition_primes.back() == 101);
  CHECK(kind_from_string("comb-verify") == Kind::comb_verify);
  CHECK(section_of(Kind::oracle_report) == "oracle");
  CHECK_THROWS_AS(kind_from_string("figures"), UsageError);
  CHECK(parse_mode_list("1:0.3,2:0.1") == std::vector<std::pair<int, double>>{{1, 0.3}, {2, 0.1}});
}

TEST_CASE("hypothesis gates") {
  auto h = from_text(Kind::hydro, "hydro.N = 100\n");
  CHECK_THROWS_WITH_AS(check_hypotheses(h), doctest::Contains("n odd"), HypothesisError);
  h.force = true;
  CHECK(check_hypotheses(h).size() == 1);
  auto f = from_text(Kind::fluct, "fluct.N = 102\n");
  CHECK_THROWS_WITH_AS(check_hypotheses(f), doctest::Contains("prime"), HypothesisError);
  f = from_text(Kind::fluct, "fluct.N = 22\nfluct.gamma = 0.8\n");
  CHECK(check_hypotheses(f).size() == 1);
  auto odd = from_text(Kind::hydro, "hydro.N = 31\n");
  CHECK_THROWS_AS(check_hypotheses(odd), UsageError);
}

TEST_CASE("summaries and tolerance records") {
  const auto s = summarize({1, 2, 3, 4});
  CHECK(s.count == 4);
  CHECK(s.mean == 2.5);
  CHECK(s.variance == doctest::Approx(5.0 / 3));
  CHECK(s.mean_stderr == doctest::Approx(std::sqrt(5.0 / 3 / 4)));
  // fourth central moment 2.5625... ; (m4 - m2^2)/n with m2 = 1.25
  CHECK(s.variance_stderr == doctest::Approx(std::sqrt((2.5625 - 1.5625) / 4)));
  CHECK(make_record("x", 1.0, 0.1, 10, 1.25, 0.0, 3.0).pass);
  CHECK_FALSE(make_record("x", 1.0, 0.1, 10, 1.35, 0.0, 3.0).pass);
  CHECK(make_record("x", 1.0, 0.0, 10, 1.04, 0.05, 0.0).pass);
}

TEST_CASE("chi-square tests") {
  const auto exact = chi_square_gof({10, 20, 30}, {1.0 / 6, 1.0 / 3, 0.5});
  CHECK(exact.statistic == doctest::Approx(0.0));
  CHECK(exact.dof == 2);
  CHECK(exact.p_value == doctest::Approx(1.0));
  const auto off = chi_square_gof({20, 20, 20}, {1.0 / 6, 1.0 / 3, 0.5});
  // (20-10)^2/10 + 0 + (20-30)^2/30
  CHECK(off.statistic == doctest::Approx(10.0 + 100.0 / 30));
  CHECK(off.p_value == doctest::Approx(std::exp(-off.statistic / 2)));
  const auto pooled = chi_square_gof({50, 1, 1}, {0.96, 0.02, 0.02});
  CHECK(pooled.dof == 1);
  const auto same = chi_square_two_sample({10, 20, 30}, {20, 40, 60});
  CHECK(same.statistic == doctest::Approx(0.0));
  CHECK(same.dof == 2);
}

TEST_CASE("csv builder, atomic writes and output paths") {
  CsvBuilder csv({"a", "b"});
  csv.cell(0.1).cell(std::string("x")).end_row();
  CHECK(csv.str() == "a,b\n0.10000000000000001,x\n");
  CsvBuilder bad({"a", "b"});
  bad.cell(1);
  CHECK_THROWS(bad.end_row());
  CHECK_THROWS(bad.cell(2).cell(3));
  const auto dir = scratch_dir("out");
  const auto path = output_path(dir + "/nested", "f.txt");
  write_atomic(path, "hello\n");
  CHECK(slurp(path) == "hello\n");
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir + "/nested")) files += e.is_regular_file();
  CHECK(files == 1);
  fs::remove_all(dir);
}

TEST_CASE("parallel_for runs every index once and rethrows") {
  std::vector<std::atomic<int>> hits(100);
  parallel_for(100, 4, [&](int i) { ++hits[static_cast<std::size_t>(i)]; });
  for (auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_WITH(parallel_for(10, 3, [](int i) {
                      if (i == 7) throw std::runtime_error("boom");
                    }),
                    "boom");
  CHECK(resolve_threads(0) >= 1);
  CHECK(resolve_threads(3) == 3);
}

TEST_CASE("comb-verify driver") {
  auto cfg = from_text(Kind::comb_verify, "comb.primes = 3,5\ncomb.partition_primes = \ncomb.binom_max = 6\n");
  const auto r = run_comb_verify(cfg);
  CHECK(r.all_pass);
  bool saw_brute = false, saw_binom = false;
  for (const auto& rec : r.records) {
    saw_brute = saw_brute || rec.theorem == "alpha_brute";
    saw_binom = saw_binom || rec.theorem == "binomial";
  }
  CHECK(saw_brute);
  CHECK(saw_binom);
  cfg.out_dir = scratch_dir("comb");
  const auto paths = write_comb_verify(r, cfg);
  const auto text = slurp(paths[0]);
  CHECK(text.rfind(R"({"theorem":"alpha","p":3,"k":1,"j":null,"count":)", 0) == 0);
  fs::remove_all(cfg.out_dir);

  cfg.primes = {9};
  CHECK_THROWS_AS(run_comb_verify(cfg), HypothesisError);
  cfg.explore = true;
  const auto e = run_comb_verify(cfg);
  bool na = false;
  for (const auto& rec : e.records) na = na || (rec.theorem == "alpha" && rec.pass == "not-applicable");
  CHECK(na);
}

TEST_CASE("partition records flag the normalization") {
  const auto cfg = from_text(Kind::comb_verify, "comb.primes = 3\ncomb.partition_primes = 3,5,7,11,13\ncomb.binom_max = 1\n");
  const auto r = run_comb_verify(cfg);
  for (const auto& rec : r.records) {
    if (rec.theorem == "partition_bound" && rec.p >= 13) CHECK(rec.pass == "true");
    if (rec.theorem == "partition_normalized" && rec.p == 13) CHECK(rec.pass == "false");
    if (rec.theorem == "partition_normalized" && rec.p <= 7) CHECK(rec.pass == "not-applicable");
  }
  CHECK_FALSE(r.all_pass);
}

TEST_CASE("hydro driver on a small system is reproducible") {
  const std::string text =
      "hydro.N = 30, 62\nhydro.replicas = 2\nhydro.times = 0.05, 0.1\nhydro.M = 64\nhydro.phi = one, cos1\n";
  const auto cfg = from_text(Kind::hydro, text);
  const auto a = run_hydro(cfg);
  const auto b = run_hydro(cfg);
  CHECK(a.rows.size() == 2 * 2 * 2 * 2);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].empirical == b.rows[i].empirical);
  for (const auto& row : a.rows) {
    if (row.phi_id == "one") {
      CHECK(row.empirical == doctest::Approx(0.5));
      CHECK(row.pde == doctest::Approx(0.5));
    }
    CHECK(row.abs_err == doctest::Approx(std::abs(row.empirical - row.pde)));
  }
  CHECK(a.pooled_error.size() == 2);
  CHECK(a.y0 == doctest::Approx(0.5));
  auto out = cfg;
  out.out_dir = scratch_dir("hydro");
  const auto paths = write_hydro(a, out);
  CHECK(slurp(paths[0]).rfind("N,gamma,t,phi_id,replica,empirical,pde,abs_err\n30,1,0.050000000000000003,one,0,", 0) == 0);
  CHECK(slurp(paths[1]).find("\"pooled_error\"") != std::string::npos);
  fs::remove_all(out.out_dir);
}

TEST_CASE("fluct driver on a small system") {
  const auto cfg = from_text(Kind::fluct, "fluct.N = 22\nfluct.replicas = 6\nfluct.T = 0.05\nfluct.phi = one, cos1\n");
  const auto r = run_fluct(cfg);
  CHECK_FALSE(r.gamma_flagged);
  // 21 times x (2 phi x 5 stats + 2 integral stats)
  CHECK(r.stats.size() == 21 * 12);
  CHECK(r.martingale.size() == 6 * 21 * 2);
  CHECK(r.find(22, 0.0, "cos1", "mean_M").value == 0.0);
  CHECK(r.find(22, 0.05, "one", "var_U").value == doctest::Approx(0.0).scale(1.0).epsilon(1e-20));
  CHECK_THROWS(r.find(22, 0.05, "cos1", "nope"));
  CHECK(r.isometry.size() == 2 * 210);
  auto out = cfg;
  out.out_dir = scratch_dir("fluct");
  const auto paths = write_fluct(r, out);
  CHECK(slurp(paths[0]).rfind("N,gamma,t,phi_id,stat,value,stderr,theory,pass\n", 0) == 0);
  CHECK(paths.size() == 4);
  fs::remove_all(out.out_dir);
}

TEST_CASE("oracle report and sample check drivers") {
  const auto o = from_text(Kind::oracle_report, "oracle.N = 10, 14\noracle.tuples = 0:1; 0:1:2:3\n");
  const auto r = run_oracle_report(o);
  CHECK(r.moments.size() == 2 * 2 * 5);
  CHECK(r.two_point.size() == 24);
  CHECK(r.variance.size() == 6);
  CHECK(r.measure_json.size() == 2);
  const auto bad = from_text(Kind::oracle_report, "oracle.N = 30\n");
  CHECK_THROWS_AS(run_oracle_report(bad), UsageError);

  const auto s = from_text(Kind::sample_check, "sample.N = 6\nsample.draws = 4000\nsample.dyn_replicas = 400\n");
  const auto res = run_sample_check(s);
  CHECK(res.exact_vs_law.dof > 0);
  CHECK(res.exact_two_point.count == 4000);
  CHECK(res.dynamics_two_point.count == 400);
}
