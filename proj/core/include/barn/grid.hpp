#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "barn/error.hpp"

namespace barn {

// Default grid resolution in meters per cell: a 0.508 m robot length maps to
// exactly 5 cells.
inline constexpr double kDefaultResolution = 0.1016;

struct Cell {
  int x = 0;  // column
  int y = 0;  // row
  bool operator==(const Cell&) const = default;
};

// Boolean obstacle raster with a physical resolution.  Row-major storage,
// row 0 is y = 0.  Immutable in spirit: every algorithm in the library takes
// grids by const reference and returns new ones.
class OccupancyGrid {
 public:
  OccupancyGrid(int width, int height, double resolution = kDefaultResolution)
      : width_(width), height_(height), resolution_(resolution) {
    if (width <= 0 || height <= 0) throw ConfigError("grid dimensions must be positive");
    if (!(resolution > 0.0)) throw ConfigError("grid resolution must be positive");
    cells_.assign(static_cast<std::size_t>(width) * height, 0);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }

  bool in_bounds(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }
  bool in_bounds(Cell c) const { return in_bounds(c.x, c.y); }

  bool occupied(int x, int y) const { return cells_[index(x, y)] != 0; }
  bool occupied(Cell c) const { return occupied(c.x, c.y); }

  // Out-of-bounds reads as free; callers that want walls check bounds first.
  bool occupied_or_free_outside(int x, int y) const { return in_bounds(x, y) && occupied(x, y); }

  void set_occupied(int x, int y, bool value) { cells_[index(x, y)] = value ? 1 : 0; }
  void set_occupied(Cell c, bool value) { set_occupied(c.x, c.y, value); }

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  std::size_t cell_count() const { return cells_.size(); }

  std::size_t occupied_count() const {
    std::size_t n = 0;
    for (auto c : cells_) n += c;
    return n;
  }

  const std::vector<std::uint8_t>& cells() const { return cells_; }

  bool operator==(const OccupancyGrid& other) const {
    return width_ == other.width_ && height_ == other.height_ &&
           resolution_ == other.resolution_ && cells_ == other.cells_;
  }

 private:
  int width_;
  int height_;
  double resolution_;
  std::vector<std::uint8_t> cells_;
};

// A grid ray: unit direction, optional step cap.
struct Ray {
  Cell origin;
  double dx = 1.0;
  double dy = 0.0;
  std::optional<int> max_steps;
};

// Number of occupied cells among the 8 Moore neighbors.  Out-of-bounds
// neighbors count as unoccupied.  Throws BoundsError if cell is outside.
int filled_neighbors(const OccupancyGrid& grid, Cell cell);

// Walks from the origin cell in unit-cell-length increments along the ray
// direction, rounding the stepped point to its containing cell.  Returns the
// number of steps that landed on free in-bounds cells before the first
// occupied cell, the grid boundary, or max_steps, whichever comes first.
// The boundary acts as a wall.  Throws InvalidOriginError / BoundsError /
// ConfigError (non-unit direction).
int cast_ray(const OccupancyGrid& grid, const Ray& ray);

// Exact Euclidean distance transform, center-to-center, in cell units.
// Occupied cells map to 0.  A grid without any occupied cell maps every cell
// to +infinity.  Row-major output, same indexing as the grid.
std::vector<double> distance_transform(const OccupancyGrid& grid);

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

}  // namespace barn
