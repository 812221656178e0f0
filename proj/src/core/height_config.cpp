#include "ifl/core/height_config.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ifl {

namespace {

void validate_slopes(std::span<const std::uint8_t> bits) {
  const auto n = bits.size();
  if (n == 0 || n % 2 != 0) {
    throw ValidationError("slopes: N must be even and positive (got N=" + std::to_string(n) + ")");
  }
  std::size_t ones = 0;
  for (auto b : bits) {
    if (b > 1) throw ValidationError("slopes: bits must be 0 or 1");
    ones += b;
  }
  if (ones != n / 2) {
    throw ValidationError("slopes: periodicity h(0)=h(N) requires exactly N/2 up-slopes (N=" +
                          std::to_string(n) + ", ones=" + std::to_string(ones) + ")");
  }
}

}  // namespace

std::int64_t base_integral(std::span<const std::uint8_t> site_slopes) {
  const auto n = static_cast<std::int64_t>(site_slopes.size());
  std::int64_t weighted = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    const int s = 2 * site_slopes[static_cast<std::size_t>(i % n)] - 1;
    weighted += i * s;
  }
  return -weighted;
}

HeightConfig HeightConfig::from_slopes(std::int64_t anchor, std::span<const std::uint8_t> slopes) {
  validate_slopes(slopes);
  const auto n = slopes.size();
  std::vector<std::uint8_t> xi(n);
  for (std::size_t i = 0; i < n; ++i) xi[(i + 1) % n] = slopes[i];
  return from_site_slopes(anchor, std::move(xi));
}

HeightConfig HeightConfig::from_site_slopes(std::int64_t anchor, std::vector<std::uint8_t> site_slopes) {
  validate_slopes(site_slopes);
  HeightConfig c;
  c.n_ = static_cast<int>(site_slopes.size());
  c.anchor_ = anchor;
  c.xi_ = std::move(site_slopes);
  c.integral_ = anchor * c.n_ + base_integral(c.xi_);
  c.rebuild_corners();
  return c;
}

HeightConfig HeightConfig::zigzag(int n, std::int64_t anchor) {
  if (n <= 0 || n % 2 != 0) throw ValidationError("zigzag: N must be even and positive");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1 : 0;
  return from_slopes(anchor, bits);
}

std::vector<std::uint8_t> HeightConfig::slopes() const {
  std::vector<std::uint8_t> out(xi_.size());
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = xi_[static_cast<std::size_t>((i + 1) % n_)];
  return out;
}

std::int64_t HeightConfig::height(Site x) const {
  const Site target = wrap(x);
  std::int64_t h = anchor_;
  for (Site y = 1; y <= target; ++y) h += 2 * xi_[static_cast<std::size_t>(y)] - 1;
  return h;
}

std::vector<std::int64_t> HeightConfig::heights() const {
  std::vector<std::int64_t> h(xi_.size());
  h[0] = anchor_;
  for (Site y = 1; y < n_; ++y) {
    h[static_cast<std::size_t>(y)] = h[static_cast<std::size_t>(y - 1)] + 2 * xi_[static_cast<std::size_t>(y)] - 1;
  }
  return h;
}

void HeightConfig::insert(std::vector<Site>& set, std::vector<int>& pos, Site x) {
  if (pos[static_cast<std::size_t>(x)] >= 0) return;
  pos[static_cast<std::size_t>(x)] = static_cast<int>(set.size());
  set.push_back(x);
}

void HeightConfig::erase(std::vector<Site>& set, std::vector<int>& pos, Site x) {
  const int at = pos[static_cast<std::size_t>(x)];
  if (at < 0) return;
  const Site last = set.back();
  set[static_cast<std::size_t>(at)] = last;
  pos[static_cast<std::size_t>(last)] = at;
  set.pop_back();
  pos[static_cast<std::size_t>(x)] = -1;
}

void HeightConfig::refresh_corner(Site x) {
  x = wrap(x);
  if (is_maximum(x)) {
    insert(maxima_, max_pos_, x);
  } else {
    erase(maxima_, max_pos_, x);
  }
  if (is_minimum(x)) {
    insert(minima_, min_pos_, x);
  } else {
    erase(minima_, min_pos_, x);
  }
}

void HeightConfig::rebuild_corners() {
  maxima_.clear();
  minima_.clear();
  max_pos_.assign(xi_.size(), -1);
  min_pos_.assign(xi_.size(), -1);
  for (Site x = 0; x < n_; ++x) refresh_corner(x);
}

CornerFlip HeightConfig::flip(Site x) {
  x = wrap(x);
  const Site next = wrap(x + 1);
  CornerFlip event{x, FlipDirection::down, -2};
  if (is_maximum(x)) {
    xi_[static_cast<std::size_t>(x)] = 0;
    xi_[static_cast<std::size_t>(next)] = 1;
  } else if (is_minimum(x)) {
    event.direction = FlipDirection::up;
    event.delta_y = 2;
    xi_[static_cast<std::size_t>(x)] = 1;
    xi_[static_cast<std::size_t>(next)] = 0;
  } else {
    throw ValidationError("not flippable: site " + std::to_string(x) + " is not a corner");
  }
  integral_ += event.delta_y;
  if (x == 0) anchor_ += event.delta_y;
  refresh_corner(x - 1);
  refresh_corner(x);
  refresh_corner(x + 1);
  return event;
}

bool HeightConfig::caches_consistent() const {
  const auto h = heights();
  const std::int64_t y = std::accumulate(h.begin(), h.end(), std::int64_t{0});
  if (y != integral_) return false;
  std::vector<Site> mx, mn;
  for (Site x = 0; x < n_; ++x) {
    const std::int64_t lap = h[static_cast<std::size_t>(wrap(x + 1))] - 2 * h[static_cast<std::size_t>(x)] +
                             h[static_cast<std::size_t>(wrap(x - 1))];
    if (lap < 0) mx.push_back(x);
    if (lap > 0) mn.push_back(x);
  }
  std::vector<Site> a(maxima_.begin(), maxima_.end()), b(minima_.begin(), minima_.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == mx && b == mn;
}

HeightConfig apply_flip(const HeightConfig& config, Site x) {
  HeightConfig out = config;
  out.flip(x);
  return out;
}

}  // namespace ifl
