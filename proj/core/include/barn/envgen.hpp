#pragma once

#include <cstdint>

#include "barn/grid.hpp"

namespace barn {

// Cellular automaton knobs.  The neighborhood is fixed at the 8 Moore
// neighbors.  clear_threshold must stay below fill_threshold or the two
// rewrite rules would fight over the same cell.
struct AutomatonParams {
  double initial_fill_percentage = 0.25;  // in [0, 1]
  int smoothing_iterations = 3;
  int fill_threshold = 5;   // >= this many filled neighbors -> fill
  int clear_threshold = 1;  // <= this many filled neighbors -> clear
  std::uint64_t seed = 0;
};

void validate(const AutomatonParams& params);

// Seeds each cell independently with probability initial_fill_percentage,
// consuming exactly width*height RNG draws in row-major order.
OccupancyGrid random_fill(int width, int height, const AutomatonParams& params);

// One smoothing pass, applied in place in raster order: the fill rule first,
// then the clear rule, and later cells see earlier cells' updates.
OccupancyGrid smooth_step(const OccupancyGrid& grid, const AutomatonParams& params);

// random_fill followed by smoothing_iterations passes of smooth_step.
// Bit-deterministic for fixed inputs.
OccupancyGrid generate(int width, int height, const AutomatonParams& params);

}  // namespace barn
