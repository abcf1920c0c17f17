#include "barn/grid.hpp"

#include <cmath>
#include <cstdlib>

namespace barn {

int filled_neighbors(const OccupancyGrid& grid, Cell cell) {
  if (!grid.in_bounds(cell)) throw BoundsError("filled_neighbors: cell out of bounds");
  int count = 0;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) continue;
      if (grid.occupied_or_free_outside(cell.x + dx, cell.y + dy)) ++count;
    }
  }
  return count;
}

int cast_ray(const OccupancyGrid& grid, const Ray& ray) {
  const double norm2 = ray.dx * ray.dx + ray.dy * ray.dy;
  if (std::abs(norm2 - 1.0) > 2e-9) throw ConfigError("cast_ray: direction must be unit length");
  if (!grid.in_bounds(ray.origin)) throw BoundsError("cast_ray: origin out of bounds");
  if (grid.occupied(ray.origin)) throw InvalidOriginError("cast_ray: origin is occupied");

  const int limit = ray.max_steps.value_or(std::numeric_limits<int>::max());
  double px = ray.origin.x;
  double py = ray.origin.y;
  int steps = 0;
  while (steps < limit) {
    px += ray.dx;
    py += ray.dy;
    const int cx = static_cast<int>(std::lround(px));
    const int cy = static_cast<int>(std::lround(py));
    if (!grid.in_bounds(cx, cy) || grid.occupied(cx, cy)) break;
    ++steps;
  }
  return steps;
}

namespace {

// Lower-envelope pass of the Felzenszwalb-Huttenlocher squared distance
// transform.  f holds integer squared distances; out receives
// min_q (p - q)^2 + f[q].  The envelope boundaries are computed in double,
// which is safe here: all parabolas take integer values at integer abscissae,
// so a boundary misplaced by rounding swaps two parabolas of equal value.
void envelope_1d(const std::vector<std::int64_t>& f, std::vector<std::int64_t>& out,
                 std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  int k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::infinity();
  z[1] = std::numeric_limits<double>::infinity();
  for (int q = 1; q < n; ++q) {
    double s;
    for (;;) {
      const int p = v[k];
      s = (static_cast<double>(f[q] - f[p]) + static_cast<double>(q) * q -
           static_cast<double>(p) * p) /
          (2.0 * (q - p));
      if (s > z[k]) break;
      --k;
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const std::int64_t d = q - v[k];
    out[q] = d * d + f[v[k]];
  }
}

}  // namespace

std::vector<double> distance_transform(const OccupancyGrid& grid) {
  const int w = grid.width();
  const int h = grid.height();
  std::vector<double> result(grid.cell_count(), kInfiniteDistance);
  if (grid.occupied_count() == 0) return result;

  // Phase 1: per-column vertical distance to the nearest occupied cell.
  // Columns with no obstacle get a sentinel larger than any true distance;
  // their parabolas never win phase 2 because some other column has a real
  // obstacle.
  const std::int64_t sentinel = w + h;
  std::vector<std::int64_t> vertical(grid.cell_count());
  for (int x = 0; x < w; ++x) {
    std::int64_t d = sentinel;
    for (int y = 0; y < h; ++y) {
      d = grid.occupied(x, y) ? 0 : std::min(d + 1, sentinel);
      vertical[grid.index(x, y)] = d;
    }
    d = vertical[grid.index(x, h - 1)];
    for (int y = h - 1; y >= 0; --y) {
      d = grid.occupied(x, y) ? 0 : std::min(d + 1, sentinel);
      auto& cell = vertical[grid.index(x, y)];
      cell = std::min(cell, d);
    }
  }

  // Phase 2: per-row lower envelope over squared vertical distances.
  std::vector<std::int64_t> f(w), d2(w);
  std::vector<int> v(w);
  std::vector<double> z(w + 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::int64_t g = vertical[grid.index(x, y)];
      f[x] = g * g;
    }
    envelope_1d(f, d2, v, z);
    for (int x = 0; x < w; ++x) {
      result[grid.index(x, y)] = std::sqrt(static_cast<double>(d2[x]));
    }
  }
  return result;
}

}  // namespace barn
