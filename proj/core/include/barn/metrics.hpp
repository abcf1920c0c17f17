#pragma once

#include <array>
#include <string>

#include "barn/grid.hpp"
#include "barn/planner.hpp"

namespace barn {

inline constexpr int kMetricCount = 5;
inline constexpr int kDefaultDispersionRange = 10;  // cells; CLI-exposed

// The five difficulty metrics for one (C-space, path) pair.  Distances are in
// cell units; dispersion is an alternation count; tortuosity is a ratio.
struct MetricVector {
  double distance_to_closest_obstacle = 0.0;  // >= 1 on free path cells
  double average_visibility = 0.0;            // >= 1 (the blocking step counts)
  double dispersion = 0.0;                    // in [0, 16], even per cell
  double characteristic_dimension = 0.0;      // >= 0
  double tortuosity = 0.0;                    // >= 1

  std::array<double, kMetricCount> to_array() const;
  static MetricVector from_array(const std::array<double, kMetricCount>& a);
};

const std::array<std::string, kMetricCount>& metric_names();

// Per-metric mean and standard deviation for z-normalization.
struct MetricStats {
  std::array<double, kMetricCount> mean{};
  std::array<double, kMetricCount> stddev{};
  std::string preset = "dataset";
};

// Reference constants from the original published dataset census.
MetricStats table2_stats();

std::array<double, kMetricCount> normalize(const MetricVector& v, const MetricStats& stats);
MetricVector denormalize(const std::array<double, kMetricCount>& z, const MetricStats& stats);

// Mean over path cells of the exact Euclidean distance to the nearest
// obstacle.  Throws NoObstacleError on an obstacle-free grid.
double avg_distance_to_obstacle(const OccupancyGrid& cspace, const Path& path);

// Mean over path cells of the 8-ray visibility (4 cardinals + 4 diagonals,
// boundary-limited).  Each ray counts its free steps plus the blocking step,
// so a fully enclosed cell scores 1.
double avg_visibility(const OccupancyGrid& cspace, const Path& path);

// Mean over path cells of the alternation count in a 16-ray circular scan:
// each ray is blocked (obstacle or boundary within max_range steps) or open,
// and alternations are counted cyclically, so the per-cell count is even.
double dispersion(const OccupancyGrid& cspace, const Path& path, int max_range);

// Mean over path cells of the minimum axis visibility: 8 axes of two opposite
// rays each, an axis scoring the sum of its rays' free-step counts (a ray
// blocked immediately contributes 0).
double characteristic_dimension(const OccupancyGrid& cspace, const Path& path);

// Arc-chord ratio of the path in cell units.  Throws on a single-cell path.
double tortuosity(const Path& path);

MetricVector compute_all(const OccupancyGrid& cspace, const Path& path,
                         int max_range = kDefaultDispersionRange);

}  // namespace barn
