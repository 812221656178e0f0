#pragma once

#include "ifl/core/height_config.hpp"
#include "ifl/core/test_function.hpp"

namespace ifl {

enum class BlockSide { right, left };

/// (1/N) sum_x xi(x) phi(x/N)
double pairing_density(const HeightConfig& config, const TestFunction& phi);

/// N^{-1/2} sum_x (xi(x) - 1/2) phi(x/N)
double pairing_fluctuation(const HeightConfig& config, const TestFunction& phi);

/// Mean occupation of the l sites right of x (x+1..x+l) or left of x (x-l..x-1).
double block_average(const HeightConfig& config, Site x, int l, BlockSide side);

}  // namespace ifl
