#include "barn/envgen.hpp"

#include "barn/rng.hpp"

namespace barn {

void validate(const AutomatonParams& params) {
  if (params.initial_fill_percentage < 0.0 || params.initial_fill_percentage > 1.0)
    throw ConfigError("initial_fill_percentage must be in [0, 1]");
  if (params.smoothing_iterations < 0)
    throw ConfigError("smoothing_iterations must be non-negative");
  if (params.fill_threshold < 0 || params.fill_threshold > 8 || params.clear_threshold < 0 ||
      params.clear_threshold > 8)
    throw ConfigError("thresholds must be in [0, 8]");
  if (params.clear_threshold >= params.fill_threshold)
    throw ConfigError("clear_threshold must be below fill_threshold");
}

OccupancyGrid random_fill(int width, int height, const AutomatonParams& params) {
  validate(params);
  OccupancyGrid grid(width, height);
  std::mt19937_64 rng(params.seed);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (uniform_double(rng) < params.initial_fill_percentage) grid.set_occupied(x, y, true);
    }
  }
  return grid;
}

OccupancyGrid smooth_step(const OccupancyGrid& grid, const AutomatonParams& params) {
  validate(params);
  OccupancyGrid out = grid;
  // Sequential in-place update: the neighbor count for a cell reflects any
  // rewrites already applied earlier in this pass.  The two rules are
  // disjoint (clear < fill), so one count decides the cell.
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const int n = filled_neighbors(out, {x, y});
      if (n >= params.fill_threshold)
        out.set_occupied(x, y, true);
      else if (n <= params.clear_threshold)
        out.set_occupied(x, y, false);
    }
  }
  return out;
}

OccupancyGrid generate(int width, int height, const AutomatonParams& params) {
  OccupancyGrid grid = random_fill(width, height, params);
  for (int i = 0; i < params.smoothing_iterations; ++i) grid = smooth_step(grid, params);
  return grid;
}

}  // namespace barn
