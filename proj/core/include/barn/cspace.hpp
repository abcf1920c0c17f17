#pragma once

#include "barn/grid.hpp"

namespace barn {

// Clearpath Jackal footprint, the dataset's reference robot.
inline constexpr double kJackalLengthM = 0.508;
inline constexpr double kJackalWidthM = 0.430;
inline constexpr double kRobotRadiusM = 0.254;  // circumscribing circle used by the simulator

// Square inflation kernel.  cells is the odd side length of the kernel; it
// must cover the footprint at the grid resolution it is applied to.
struct RobotFootprint {
  double length_m = kJackalLengthM;
  double width_m = kJackalWidthM;
  int cells = 5;
};

// Kernel size for a footprint at a given resolution: ceil(max_dim/resolution)
// rounded up to odd.
RobotFootprint footprint_for_resolution(double length_m, double width_m, double resolution);

inline RobotFootprint jackal_footprint(double resolution = kDefaultResolution) {
  return footprint_for_resolution(kJackalLengthM, kJackalWidthM, resolution);
}

// Minkowski dilation with the square kernel: a C-space cell is occupied iff
// the kernel centered on it overlaps any occupied input cell.  Area outside
// the grid counts as free, so edge cells can stay free and edge endpoints
// exist.  (Ray casting uses the opposite boundary rule; the asymmetry is
// deliberate.)
OccupancyGrid inflate(const OccupancyGrid& grid, const RobotFootprint& footprint);

}  // namespace barn
