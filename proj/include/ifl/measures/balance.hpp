#pragma once

#include "ifl/core/height_config.hpp"

namespace ifl {

/// Relative residual of the pointwise balance relation between h and h^{x,x+1}:
/// |rate(h' -> h) w(h') - rate(h -> h') w(h)| / max(both), with w = e^{-|Y|/N^gamma}.
/// Returns exactly 0 when xi(x) == xi(x+1).
double balance_check(int n, double gamma, const HeightConfig& config, Site x);

/// Anchor half-width A such that anchors |a| > A carry less than `tail` of the measure.
int anchor_window(int n, double gamma, double tail);

}  // namespace ifl
