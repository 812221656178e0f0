#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string output;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(IFL_BINARY) + " " + args + " 2>&1";
  Run r{0, ""};
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.output += buf.data();
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string config(const std::string& name) { return std::string(IFL_CONFIG_DIR) + "/" + name; }

std::string scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("ifl_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("comb-verify on the table config exits 0 and writes JSONL") {
  const auto out = scratch("comb");
  const auto r = run("comb-verify --config " + config("comb_tables.cfg") + " --out " + out);
  CHECK(r.status == 0);
  const auto text = slurp(out + "/comb_verify.jsonl");
  CHECK(text.find("\"theorem\":\"alpha\",\"p\":19") != std::string::npos);
  CHECK(text.find("\"pass\":\"false\"") == std::string::npos);
  fs::remove_all(out);
}

TEST_CASE("comb-verify on the default config reports the partition normalization and exits 1") {
  const auto out = scratch("combdefault");
  const auto r = run("comb-verify --config " + config("default.cfg") + " --out " + out);
  CHECK(r.status == 1);
  std::istringstream lines(slurp(out + "/comb_verify.jsonl"));
  std::string line;
  int failed = 0;
  while (std::getline(lines, line)) {
    if (line.find("\"pass\":\"false\"") == std::string::npos) continue;
    ++failed;
    CHECK(line.find("\"theorem\":\"partition_normalized\"") != std::string::npos);
  }
  CHECK(failed > 0);
  fs::remove_all(out);
}

TEST_CASE("hydro with N = 100 is rejected with exit 2 citing the n-odd hypothesis") {
  const auto r = run("hydro --config " + config("bad_hydro.cfg") + " --out " + scratch("bad"));
  CHECK(r.status == 2);
  CHECK(r.output.find("n odd") != std::string::npos);
}

TEST_CASE("IFL_SEED runs are byte-identical and override the seed flag") {
  const auto a = scratch("seed_a"), b = scratch("seed_b"), c = scratch("seed_c");
  const auto ra = run("fluct --config " + config("fluct_small.cfg") + " --out " + a, "IFL_SEED=7");
  const auto rb = run("fluct --config " + config("fluct_small.cfg") + " --out " + b + " --seed 99", "IFL_SEED=7");
  const auto rc = run("fluct --config " + config("fluct_small.cfg") + " --out " + c + " --seed 99");
  REQUIRE(ra.status == 0);
  REQUIRE(rb.status == 0);
  REQUIRE(rc.status == 0);
  CHECK(rb.output.find("IFL_SEED=7 overrides seed 99") != std::string::npos);
  for (const char* f : {"fluct.csv", "martingale.csv", "martingale_ensemble.csv", "fluct_summary.json"}) {
    CHECK(slurp(a + "/" + f) == slurp(b + "/" + f));
  }
  CHECK(slurp(a + "/martingale.csv") != slurp(c + "/martingale.csv"));
  for (const auto& d : {a, b, c}) fs::remove_all(d);
}

TEST_CASE("usage errors name the offending token") {
  const auto bad_flag = run("hydro --frobnicate");
  CHECK(bad_flag.status == 2);
  CHECK(bad_flag.output.find("--frobnicate") != std::string::npos);
  const auto dir = scratch("cfg");
  fs::create_directories(dir);
  std::ofstream(dir + "/x.cfg") << "hydro.nope = 3\n";
  const auto bad_key = run("hydro --config " + dir + "/x.cfg");
  CHECK(bad_key.status == 2);
  CHECK(bad_key.output.find("hydro.nope") != std::string::npos);
  CHECK(run("").status == 2);
  CHECK(run("figures").status == 2);
  fs::remove_all(dir);
}

TEST_CASE("simulate and pde subcommands") {
  const auto out = scratch("simpde");
  CHECK(run("simulate --out " + out).status == 0);
  CHECK(slurp(out + "/trajectory.csv").rfind("t,Y,num_maxima,U_cos1,", 0) == 0);
  CHECK(slurp(out + "/configs.txt").rfind("initial N=50 anchor=0 slopes=1010", 0) == 0);
  CHECK(run("pde --out " + out).status == 0);
  CHECK(slurp(out + "/pde_summary.json").find("\"tau0\":2.00") != std::string::npos);
  fs::remove_all(out);
}

TEST_CASE("hydro quick config writes the documented schema") {
  const auto out = scratch("hydro");
  const auto r = run("hydro --config " + config("hydro_quick.cfg") + " --out " + out);
  CHECK(r.status == 0);
  CHECK(slurp(out + "/hydro.csv").rfind("N,gamma,t,phi_id,replica,empirical,pde,abs_err\n", 0) == 0);
  fs::remove_all(out);
}
