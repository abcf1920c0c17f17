#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "barn/grid.hpp"

namespace barn {

// Path cost on the 8-connected grid, kept exact as (cardinal + diagonal*sqrt2)
// with integer counts.  sqrt2 is irrational, so equality is componentwise and
// ordering can be decided in integer arithmetic; A* and any oracle computing
// the same quantity agree bit-for-bit.
struct StepCost {
  std::int64_t cardinal = 0;
  std::int64_t diagonal = 0;

  double value() const;
  bool operator==(const StepCost&) const = default;
};

// Exact comparison of a.cardinal + a.diagonal*sqrt2 vs the same for b.
bool less(const StepCost& a, const StepCost& b);
StepCost add(const StepCost& a, const StepCost& b);

// Octile distance between two cells as an exact StepCost.
StepCost octile(Cell a, Cell b);

// Ordered run of 8-adjacent free cells from start to goal.
struct Path {
  std::vector<Cell> cells;
  double resolution = kDefaultResolution;

  StepCost cost() const;
};

// Sum of per-step lengths (1 or sqrt2 cells) times resolution, in meters.
double path_length_m(const Path& path);

// Draws the start uniformly from the free cells of column x=0 and the goal
// uniformly from the free cells of column x=width-1 (start first, one draw
// each).  Throws NoEndpointError if either edge column has no free cell.
std::pair<Cell, Cell> select_endpoints(const OccupancyGrid& cspace, std::uint64_t rng_seed);

// Flood-fill reachability under 8-connectivity.  Throws InvalidEndpointError
// if either endpoint is occupied or out of bounds.
bool is_connected(const OccupancyGrid& cspace, Cell start, Cell goal);

// A* on the 8-connected grid: cardinal steps cost 1, diagonal steps sqrt2,
// octile heuristic.  A diagonal move is forbidden when both of its adjacent
// cardinal cells are occupied (no squeezing through diagonal gaps).
// Tie-breaking prefers lower f, then lower h, then row-major cell order, so
// the returned path is deterministic.  Throws NoPathError when the goal is
// unreachable under these move rules.
Path astar(const OccupancyGrid& cspace, Cell start, Cell goal);

// Path JSON: {"cells": [[x,y],...], "resolution": r}
std::string path_to_json(const Path& path);
Path path_from_json(const std::string& text);

}  // namespace barn
