#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifl {

using Site = int;

/// Raised when an input violates a model invariant (unbalanced slopes, odd N, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FlipDirection : std::uint8_t { down, up };

/// A corner flip. `down` turns a local maximum into a minimum (a particle jumps
/// from x to x+1); `up` is the reverse move.
struct CornerFlip {
  Site site = 0;
  FlipDirection direction = FlipDirection::down;
  int delta_y = 0;

  friend bool operator==(const CornerFlip&, const CornerFlip&) = default;
};

/// Sign with the convention sgn(0) = 0.
constexpr int sign_of(std::int64_t v) noexcept { return (v > 0) - (v < 0); }

/// Periodic height function on the discrete torus of even size N.
///
/// The configuration is held as (anchor = h(0), slope bits, Y, corner sets).
/// Slope bit xi(x) in {0,1} lives on the edge [x-1, x), so that
/// h(x) = h(x-1) + 2 xi(x) - 1 and xi(0) == xi(N). Sites are 0..N-1 and all
/// index arithmetic is modulo N. Heights are reconstructed on demand only.
///
/// Corner sets are index-addressable arrays with a position table, so a
/// uniform corner is drawn in O(1) and a flip updates them in O(1).
class HeightConfig {
 public:
  HeightConfig() = default;

  /// `slopes[i]` is xi(i+1) for i = 0..N-1, the order of the textual format.
  static HeightConfig from_slopes(std::int64_t anchor, std::span<const std::uint8_t> slopes);
  /// Same, but `site_slopes[x]` is xi(x) for x = 0..N-1.
  static HeightConfig from_site_slopes(std::int64_t anchor, std::vector<std::uint8_t> site_slopes);
  /// The alternating configuration 1010... with h(0) = anchor.
  static HeightConfig zigzag(int n, std::int64_t anchor = 0);

  int size() const noexcept { return n_; }
  std::int64_t anchor() const noexcept { return anchor_; }
  /// Y(h) = sum over the torus of h(x).
  std::int64_t integral() const noexcept { return integral_; }

  int slope(Site x) const noexcept { return xi_[static_cast<std::size_t>(wrap(x))]; }
  /// Site-indexed slopes: element x is xi(x).
  std::span<const std::uint8_t> site_slopes() const noexcept { return xi_; }
  /// Slopes in textual order xi(1), ..., xi(N).
  std::vector<std::uint8_t> slopes() const;

  std::int64_t height(Site x) const;
  std::vector<std::int64_t> heights() const;

  bool is_maximum(Site x) const noexcept { return slope(x) == 1 && slope(x + 1) == 0; }
  bool is_minimum(Site x) const noexcept { return slope(x) == 0 && slope(x + 1) == 1; }

  std::span<const Site> maxima() const noexcept { return maxima_; }
  std::span<const Site> minima() const noexcept { return minima_; }
  int num_maxima() const noexcept { return static_cast<int>(maxima_.size()); }

  /// Flips the corner at x in place. Throws ValidationError("not flippable") if
  /// x is neither a maximum nor a minimum.
  CornerFlip flip(Site x);

  /// Recomputes Y and corner sets from (anchor, slopes) and compares them with
  /// the incrementally maintained caches.
  bool caches_consistent() const;

  /// Equality of the represented height function (anchor and slopes).
  friend bool operator==(const HeightConfig& a, const HeightConfig& b) noexcept {
    return a.anchor_ == b.anchor_ && a.xi_ == b.xi_;
  }

 private:
  Site wrap(Site x) const noexcept {
    const Site r = x % n_;
    return r < 0 ? r + n_ : r;
  }
  void rebuild_corners();
  void refresh_corner(Site x);
  static void insert(std::vector<Site>& set, std::vector<int>& pos, Site x);
  static void erase(std::vector<Site>& set, std::vector<int>& pos, Site x);

  int n_ = 0;
  std::int64_t anchor_ = 0;
  std::int64_t integral_ = 0;
  std::vector<std::uint8_t> xi_;
  std::vector<Site> maxima_;
  std::vector<Site> minima_;
  std::vector<int> max_pos_;
  std::vector<int> min_pos_;
};

/// Value-semantics flip: returns a copy of `config` with the corner at x flipped.
HeightConfig apply_flip(const HeightConfig& config, Site x);

/// Y for anchor 0: -sum_{i=1}^{N} i (2 xi(i) - 1), with xi(N) = xi(0).
std::int64_t base_integral(std::span<const std::uint8_t> site_slopes);

}  // namespace ifl
