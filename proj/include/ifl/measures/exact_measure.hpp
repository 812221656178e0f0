#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ifl/combinatorics/partition.hpp"
#include "ifl/core/height_config.hpp"

namespace ifl {

enum class Restriction { all, y_plus_one, y_minus_one, y_above_one, y_below_minus_one };

std::string to_string(Restriction r);
Restriction restriction_from_string(const std::string& s);

/// The invariant measure mu*_N proportional to e^{-|Y|/N^gamma}, enumerated over slope sequences.
///
/// Each balanced sequence xi (bit x of the mask is xi(x)) carries its anchor-0
/// integral; the anchor sum is done in closed form per residue of that integral.
class ExactMeasure {
 public:
  static constexpr int max_size = 26;

  ExactMeasure(int n, double gamma);

  int size() const { return n_; }
  double gamma() const { return gamma_; }
  double z() const { return z_; }
  std::size_t num_sequences() const { return masks_.size(); }
  std::uint32_t mask(std::size_t i) const { return masks_[i]; }
  std::int32_t base_integral(std::size_t i) const { return base_[i]; }
  int residue(std::size_t i) const { return ((base_[i] % n_) + n_) % n_; }

  /// Anchor-summed weights for the class of sequence i.
  const ResidueWeights& weights(std::size_t i) const { return by_residue_[static_cast<std::size_t>(residue(i))]; }
  const ResidueWeights& residue_weights_of(int r) const { return by_residue_[static_cast<std::size_t>(r)]; }
  /// Anchor-summed weight of residue class r restricted to an integral level set.
  double restricted_weight(int r, Restriction restriction) const;

  /// Number of sequences with anchor-0 integral = r (mod N).
  const std::vector<std::int64_t>& class_counts() const { return counts_; }

  /// mu*(sequence i), marginal over anchors.
  double probability(std::size_t i) const { return weights(i).total() / z_; }

  /// P(Y = y) for |y| <= max_abs.
  std::vector<std::pair<std::int64_t, double>> y_law(std::int64_t max_abs) const;

  /// Unnormalized weight e^{-|Y|/N^gamma}.
  double weight_of_integral(std::int64_t y) const;

 private:
  int n_;
  double gamma_;
  double lambda_;
  double z_ = 0.0;
  std::vector<std::uint32_t> masks_;
  std::vector<std::int32_t> base_;
  std::vector<std::int64_t> counts_;
  std::vector<ResidueWeights> by_residue_;
};

/// JSON record {N, gamma, Z, y_law: [[y, prob], ...]}.
std::string exact_measure_json(const ExactMeasure& measure, std::int64_t max_abs);

}  // namespace ifl
