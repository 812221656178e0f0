#pragma once

#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "ifl/combinatorics/subset_dp.hpp"
#include "ifl/core/height_config.hpp"
#include "ifl/dynamics/rng.hpp"

namespace ifl {

/// Exact sampler for mu*_N.
///
/// Draws the residue class of Y and its sign side with weight count * W,
/// then the anchor offset from the exact geometric law of that side, then a
/// uniform slope sequence of the class by unranking a uniform exact integer.
class InvariantSampler {
 public:
  InvariantSampler(int n, double gamma);

  int size() const { return n_; }
  HeightConfig sample(RngStream& rng) const;

 private:
  struct Branch {
    int residue;
    int side;  // +1, -1, 0
  };

  int n_;
  double gamma_;
  double escape_;  // 1 - e^{-N^{1-gamma}}
  std::shared_ptr<const SuffixCountTable> table_;
  std::vector<Branch> branches_;
  std::vector<double> branch_weights_;
};

HeightConfig sample_invariant(int n, double gamma, RngStream& rng);

/// Initial measure: product Bernoulli(rho0(x/N)) conditioned on balance, and an
/// anchor j drawn with weight e^{-|j - N h0(0)|}.
struct ProfileMeasureSpec {
  std::function<double(double)> rho0;
  double h0_at_zero = 0.0;
  int n = 0;
};

struct ProfileSampleStats {
  int rejections = 0;
  bool used_fallback = false;
};

HeightConfig sample_profile(const ProfileMeasureSpec& spec, RngStream& rng, ProfileSampleStats* stats = nullptr,
                            int rejection_cap = 10000);

/// Midpoint-rule integral of rho0 over [0,1).
double profile_mass(const std::function<double(double)>& rho0, int points = 1 << 14);

}  // namespace ifl
