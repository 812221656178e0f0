#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "ifl/dynamics/ledger.hpp"
#include "ifl/harness/experiments.hpp"
#include "ifl/harness/output.hpp"
#include "ifl/harness/runs.hpp"
#include "ifl/measures/samplers.hpp"

namespace ifl {

const StatRecord& FluctResult::find(int n, double t, const std::string& phi_id, const std::string& stat) const {
  for (const auto& s : stats) {
    if (s.n == n && std::abs(s.t - t) < 1e-12 && s.phi_id == phi_id && s.record.name == stat) return s.record;
  }
  throw std::out_of_range("no fluct statistic " + stat + " for " + phi_id);
}

namespace {

struct ReplicaPath {
  // [time][phi]
  std::vector<std::vector<MartingaleLedger::Terms>> terms;
  std::vector<double> x, qvx;
};

StatRecord compare_means(std::string name, const Summary& a, const Summary& b, int replicas) {
  // a estimates a quantity whose expectation is the mean of b
  const double se = std::hypot(a.variance_stderr, b.mean_stderr);
  return make_record(std::move(name), a.variance, se, replicas, b.mean, 1e-12, 3.0);
}

}  // namespace

FluctResult run_fluct(const ExperimentConfig& cfg) {
  FluctResult result;
  result.warnings = check_hypotheses(cfg);
  result.gamma_flagged = cfg.gamma <= 6.0 / 7.0;
  std::vector<TestFunction> phis;
  for (const auto& id : cfg.phi_ids) phis.push_back(TestFunction::from_id(id));
  auto times = cfg.times.empty() ? default_record_times(cfg.horizon) : cfg.times;
  std::sort(times.begin(), times.end());
  const double horizon = times.back() > 0 ? times.back() : cfg.horizon;

  for (std::size_t ni = 0; ni < cfg.n_list.size(); ++ni) {
    const int n = cfg.n_list[ni];
    const auto params = RateParams::make(n, cfg.gamma);
    const InvariantSampler sampler(n, cfg.gamma);
    std::vector<ReplicaPath> paths(static_cast<std::size_t>(cfg.replicas));
    parallel_for(cfg.replicas, cfg.threads, [&](int r) {
      RngStream rng(cfg.seed, stream_id(Kind::fluct, static_cast<int>(ni), static_cast<std::uint64_t>(r)));
      auto config = sampler.sample(rng);
      MartingaleLedger ledger(phis);
      auto& path = paths[static_cast<std::size_t>(r)];
      // the ledger keeps only the latest terms, so read them at each grid point
      struct Tap : Observer {
        MartingaleLedger* ledger;
        ReplicaPath* path;
        std::size_t count;
        std::vector<std::string> columns() const override { return {}; }
        void start(const HeightConfig&, const RateParams&) override {}
        void advance(const HeightConfig&, double) override {}
        void after_flip(const HeightConfig&, const CornerFlip&) override {}
        void record(double t, const HeightConfig&, std::vector<double>&) override {
          std::vector<MartingaleLedger::Terms> row;
          for (std::size_t f = 0; f < count; ++f) row.push_back(ledger->terms(f));
          path->terms.push_back(std::move(row));
          const auto [x, qv] = ledger->integral_martingale(t);
          path->x.push_back(x);
          path->qvx.push_back(qv);
        }
      } tap;
      tap.ledger = &ledger;
      tap.path = &path;
      tap.count = phis.size();
      Observer* both[] = {&ledger, &tap};
      simulate(config, params, horizon, both, rng, times);
    });

    for (std::size_t r = 0; r < paths.size(); ++r) {
      for (std::size_t ti = 0; ti < times.size(); ++ti) {
        for (std::size_t f = 0; f < phis.size(); ++f) {
          const auto& tm = paths[r].terms[ti][f];
          result.martingale.push_back({n, static_cast<int>(r), times[ti], phis[f].id(), tm.u, tm.k, tm.b, tm.m, tm.qv,
                                       tm.p, tm.kp, tm.bp, tm.mp, tm.qvp, paths[r].x[ti], paths[r].qvx[ti]});
        }
      }
    }

    auto collect = [&](std::size_t ti, std::size_t f, auto field) {
      std::vector<double> v;
      for (const auto& p : paths) v.push_back(field(p.terms[ti][f]));
      return summarize(v);
    };
    const int reps = cfg.replicas;
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
      const double t = times[ti];
      for (std::size_t f = 0; f < phis.size(); ++f) {
        const auto& phi = phis[f];
        const auto u = collect(ti, f, [](const auto& x) { return x.u; });
        const auto m = collect(ti, f, [](const auto& x) { return x.m; });
        const auto qv = collect(ti, f, [](const auto& x) { return x.qv; });
        const auto b = collect(ti, f, [](const auto& x) { return x.b; });
        const double var_theory = 0.25 * (phi.l2_norm_sq() - phi.mean() * phi.mean());
        const double qv_theory = 0.25 * t * phi.grad_norm_sq();
        auto add = [&](StatRecord rec) { result.stats.push_back({n, cfg.gamma, t, phi.id(), std::move(rec)}); };
        add(make_record("var_U", u.variance, u.variance_stderr, reps, var_theory, 1e-12, 3.0));
        add(make_record("mean_M", m.mean, m.mean_stderr, reps, 0.0, 1e-12, 3.0));
        add(compare_means("var_M", m, qv, reps));
        add(make_record("mean_QV", qv.mean, qv.mean_stderr, reps, qv_theory, std::max(0.05 * qv_theory, 1e-12), 0.0));
        add(make_record("var_B", b.variance, b.variance_stderr, reps, 0.0, std::max(var_theory / 10.0, 1e-12), 0.0));
      }
      std::vector<double> xs, qs;
      for (const auto& p : paths) {
        xs.push_back(p.x[ti]);
        qs.push_back(p.qvx[ti]);
      }
      const auto x = summarize(xs);
      const auto q = summarize(qs);
      result.stats.push_back({n, cfg.gamma, t, "Y", make_record("mean_X", x.mean, x.mean_stderr, reps, 0.0, 1e-12, 3.0)});
      result.stats.push_back({n, cfg.gamma, t, "Y", compare_means("var_X", x, q, reps)});
    }

    // isometry on increments: E[(M_t - M_s)^2] = E[QV_t - QV_s]
    for (std::size_t f = 0; f <= phis.size(); ++f) {
      const bool integral = f == phis.size();
      if (!integral && phis[f].kind() == TestFunction::Kind::constant) continue;
      for (std::size_t si = 0; si < times.size(); ++si) {
        for (std::size_t ti = si + 1; ti < times.size(); ++ti) {
          std::vector<double> inc, dq, diff;
          for (const auto& p : paths) {
            double a, c;
            if (integral) {
              a = p.x[ti] - p.x[si];
              c = p.qvx[ti] - p.qvx[si];
            } else {
              a = p.terms[ti][f].m - p.terms[si][f].m;
              c = p.terms[ti][f].qv - p.terms[si][f].qv;
            }
            inc.push_back(a * a);
            dq.push_back(c);
            diff.push_back(a * a - c);
          }
          const auto d = summarize(diff);
          IsometryRow row{n, integral ? "Y" : phis[f].id(), times[si], times[ti], summarize(inc), summarize(dq), false};
          row.pass = std::abs(d.mean) <= std::max(3.0 * d.mean_stderr, 1e-12);
          result.isometry.push_back(std::move(row));
        }
      }
    }
  }
  return result;
}

std::vector<std::string> write_fluct(const FluctResult& result, const ExperimentConfig& cfg) {
  std::vector<std::string> paths;
  {
    CsvBuilder csv({"N", "gamma", "t", "phi_id", "stat", "value", "stderr", "theory", "pass"});
    for (const auto& s : result.stats) {
      csv.cell(s.n).cell(s.gamma).cell(s.t).cell(s.phi_id).cell(s.record.name).cell(s.record.value);
      csv.cell(s.record.stderr_).cell(s.record.theory).cell(s.record.pass);
      csv.end_row();
    }
    paths.push_back(output_path(cfg.out_dir, "fluct.csv"));
    write_atomic(paths.back(), csv.str());
  }
  {
    CsvBuilder csv({"N", "replica", "t", "phi_id", "U", "K", "B", "M", "QV", "P", "KP", "BP", "MP", "QVP", "X", "QVX"});
    for (const auto& r : result.martingale) {
      csv.cell(r.n).cell(r.replica).cell(r.t).cell(r.phi_id).cell(r.u).cell(r.k).cell(r.b).cell(r.m).cell(r.qv);
      csv.cell(r.p).cell(r.kp).cell(r.bp).cell(r.mp).cell(r.qvp).cell(r.x).cell(r.qvx);
      csv.end_row();
    }
    paths.push_back(output_path(cfg.out_dir, "martingale.csv"));
    write_atomic(paths.back(), csv.str());
  }
  {
    CsvBuilder csv({"N", "phi_id", "s", "t", "mean_increment_sq", "stderr_increment_sq", "mean_qv_increment",
                    "stderr_qv_increment", "pass"});
    for (const auto& r : result.isometry) {
      csv.cell(r.n).cell(r.phi_id).cell(r.s).cell(r.t).cell(r.increment_sq.mean).cell(r.increment_sq.mean_stderr);
      csv.cell(r.qv_increment.mean).cell(r.qv_increment.mean_stderr).cell(r.pass);
      csv.end_row();
    }
    paths.push_back(output_path(cfg.out_dir, "martingale_ensemble.csv"));
    write_atomic(paths.back(), csv.str());
  }
  nlohmann::json j;
  j["N"] = cfg.n_list;
  j["gamma"] = cfg.gamma;
  j["replicas"] = cfg.replicas;
  j["gamma_flagged"] = result.gamma_flagged;
  j["warnings"] = result.warnings;
  int passed = 0;
  nlohmann::json failed = nlohmann::json::array();
  for (const auto& s : result.stats) {
    if (s.record.pass) {
      ++passed;
    } else {
      failed.push_back({{"N", s.n}, {"t", s.t}, {"phi_id", s.phi_id}, {"stat", s.record.name}});
    }
  }
  j["stats_total"] = result.stats.size();
  j["stats_passed"] = passed;
  j["failed"] = failed;
  int iso_pass = 0;
  for (const auto& r : result.isometry) iso_pass += r.pass;
  j["isometry_total"] = result.isometry.size();
  j["isometry_passed"] = iso_pass;
  paths.push_back(output_path(cfg.out_dir, "fluct_summary.json"));
  write_atomic(paths.back(), j.dump(2) + "\n");
  return paths;
}

}  // namespace ifl
