#include "barn/cspace.hpp"

#include <algorithm>
#include <cmath>

namespace barn {

RobotFootprint footprint_for_resolution(double length_m, double width_m, double resolution) {
  if (!(resolution > 0.0)) throw ConfigError("footprint: resolution must be positive");
  if (!(length_m > 0.0) || !(width_m > 0.0))
    throw ConfigError("footprint: dimensions must be positive");
  const double max_dim = std::max(length_m, width_m);
  // The 1e-9 slack keeps exact multiples (0.508 / 0.1016 = 5) from rounding up.
  int cells = static_cast<int>(std::ceil(max_dim / resolution - 1e-9));
  cells = std::max(cells, 1);
  if (cells % 2 == 0) ++cells;
  return RobotFootprint{length_m, width_m, cells};
}

OccupancyGrid inflate(const OccupancyGrid& grid, const RobotFootprint& footprint) {
  if (footprint.cells < 1 || footprint.cells % 2 == 0)
    throw ConfigError("inflate: kernel side must be odd and >= 1");
  const double covered = footprint.cells * grid.resolution();
  if (covered + 1e-12 < std::max(footprint.length_m, footprint.width_m))
    throw ConfigError("inflate: kernel does not cover the footprint at this resolution");

  const int r = footprint.cells / 2;
  const int w = grid.width();
  const int h = grid.height();

  // Separable square dilation: horizontal pass then vertical pass.
  OccupancyGrid rows(w, h, grid.resolution());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      bool hit = false;
      for (int dx = -r; dx <= r && !hit; ++dx) hit = grid.occupied_or_free_outside(x + dx, y);
      rows.set_occupied(x, y, hit);
    }
  }
  OccupancyGrid out(w, h, grid.resolution());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      bool hit = false;
      for (int dy = -r; dy <= r && !hit; ++dy) hit = rows.occupied_or_free_outside(x, y + dy);
      out.set_occupied(x, y, hit);
    }
  }
  return out;
}

}  // namespace barn
