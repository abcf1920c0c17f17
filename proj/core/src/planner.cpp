#include "barn/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include <nlohmann/json.hpp>

#include "barn/rng.hpp"

namespace barn {

double StepCost::value() const {
  return static_cast<double>(cardinal) + static_cast<double>(diagonal) * std::numbers::sqrt2;
}

bool less(const StepCost& a, const StepCost& b) {
  // a.c + a.d*sqrt2 < b.c + b.d*sqrt2  <=>  L < R*sqrt2 with
  // L = a.c - b.c, R = b.d - a.d; decide by sign, then square.
  const std::int64_t l = a.cardinal - b.cardinal;
  const std::int64_t r = b.diagonal - a.diagonal;
  if (r == 0) return l < 0;
  if (r > 0) {
    if (l < 0) return true;
    return l * l < 2 * r * r;
  }
  if (l >= 0) return false;
  return l * l > 2 * r * r;
}

StepCost add(const StepCost& a, const StepCost& b) {
  return {a.cardinal + b.cardinal, a.diagonal + b.diagonal};
}

StepCost octile(Cell a, Cell b) {
  const std::int64_t dx = std::abs(a.x - b.x);
  const std::int64_t dy = std::abs(a.y - b.y);
  return {std::max(dx, dy) - std::min(dx, dy), std::min(dx, dy)};
}

StepCost Path::cost() const {
  StepCost total;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    const bool diagonal = cells[i].x != cells[i - 1].x && cells[i].y != cells[i - 1].y;
    (diagonal ? total.diagonal : total.cardinal) += 1;
  }
  return total;
}

double path_length_m(const Path& path) {
  return path.cost().value() * path.resolution;
}

std::pair<Cell, Cell> select_endpoints(const OccupancyGrid& cspace, std::uint64_t rng_seed) {
  std::vector<int> left, right;
  for (int y = 0; y < cspace.height(); ++y) {
    if (!cspace.occupied(0, y)) left.push_back(y);
    if (!cspace.occupied(cspace.width() - 1, y)) right.push_back(y);
  }
  if (left.empty()) throw NoEndpointError("no free cell on the left edge column");
  if (right.empty()) throw NoEndpointError("no free cell on the right edge column");
  std::mt19937_64 rng(rng_seed);
  const Cell start{0, left[uniform_below(rng, left.size())]};
  const Cell goal{cspace.width() - 1, right[uniform_below(rng, right.size())]};
  return {start, goal};
}

namespace {

void check_endpoint(const OccupancyGrid& cspace, Cell c, const char* what) {
  if (!cspace.in_bounds(c)) throw InvalidEndpointError(std::string(what) + " out of bounds");
  if (cspace.occupied(c)) throw InvalidEndpointError(std::string(what) + " is occupied");
}

constexpr int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
constexpr int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};

// Diagonal moves that would cut through a blocked corner pair are forbidden.
bool move_allowed(const OccupancyGrid& grid, Cell from, int dir) {
  const int nx = from.x + kDx[dir];
  const int ny = from.y + kDy[dir];
  if (!grid.in_bounds(nx, ny) || grid.occupied(nx, ny)) return false;
  if (dir >= 4) {
    const bool side_a = grid.occupied_or_free_outside(from.x + kDx[dir], from.y);
    const bool side_b = grid.occupied_or_free_outside(from.x, from.y + kDy[dir]);
    if (side_a && side_b) return false;
  }
  return true;
}

}  // namespace

bool is_connected(const OccupancyGrid& cspace, Cell start, Cell goal) {
  check_endpoint(cspace, start, "start");
  check_endpoint(cspace, goal, "goal");
  if (start == goal) return true;

  std::vector<std::uint8_t> visited(cspace.cell_count(), 0);
  std::vector<Cell> stack{start};
  visited[cspace.index(start.x, start.y)] = 1;
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    for (int d = 0; d < 8; ++d) {
      const int nx = c.x + kDx[d];
      const int ny = c.y + kDy[d];
      if (!cspace.in_bounds(nx, ny) || cspace.occupied(nx, ny)) continue;
      auto& seen = visited[cspace.index(nx, ny)];
      if (seen) continue;
      if (nx == goal.x && ny == goal.y) return true;
      seen = 1;
      stack.push_back({nx, ny});
    }
  }
  return false;
}

Path astar(const OccupancyGrid& cspace, Cell start, Cell goal) {
  check_endpoint(cspace, start, "start");
  check_endpoint(cspace, goal, "goal");

  const std::size_t n = cspace.cell_count();
  const auto idx = [&](Cell c) { return cspace.index(c.x, c.y); };

  struct Entry {
    StepCost f, h;
    std::size_t cell;
    StepCost g;  // g at push time, for stale-entry detection
  };
  const auto worse = [](const Entry& a, const Entry& b) {
    if (a.f != b.f) return less(b.f, a.f);
    if (a.h != b.h) return less(b.h, a.h);
    return a.cell > b.cell;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> open(worse);

  constexpr StepCost kUnreached{-1, -1};
  std::vector<StepCost> g(n, kUnreached);
  std::vector<std::uint8_t> closed(n, 0);
  std::vector<std::int32_t> parent(n, -1);

  g[idx(start)] = StepCost{};
  open.push({octile(start, goal), octile(start, goal), idx(start), StepCost{}});

  const int w = cspace.width();
  while (!open.empty()) {
    const Entry top = open.top();
    open.pop();
    if (closed[top.cell] || g[top.cell] != top.g) continue;
    closed[top.cell] = 1;

    const Cell c{static_cast<int>(top.cell % w), static_cast<int>(top.cell / w)};
    if (c == goal) break;

    for (int d = 0; d < 8; ++d) {
      if (!move_allowed(cspace, c, d)) continue;
      const Cell nb{c.x + kDx[d], c.y + kDy[d]};
      const std::size_t ni = idx(nb);
      if (closed[ni]) continue;
      const StepCost step{d < 4 ? 1 : 0, d < 4 ? 0 : 1};
      const StepCost ng = add(g[top.cell], step);
      if (g[ni] != kUnreached && !less(ng, g[ni])) continue;
      g[ni] = ng;
      parent[ni] = static_cast<std::int32_t>(top.cell);
      const StepCost h = octile(nb, goal);
      open.push({add(ng, h), h, ni, ng});
    }
  }

  if (!closed[idx(goal)]) throw NoPathError("goal unreachable from start");

  Path path;
  path.resolution = cspace.resolution();
  for (std::int64_t at = static_cast<std::int64_t>(idx(goal)); at >= 0;
       at = parent[static_cast<std::size_t>(at)]) {
    path.cells.push_back({static_cast<int>(at % w), static_cast<int>(at / w)});
    if (static_cast<std::size_t>(at) == idx(start)) break;
  }
  std::reverse(path.cells.begin(), path.cells.end());
  return path;
}

std::string path_to_json(const Path& path) {
  nlohmann::json j;
  j["cells"] = nlohmann::json::array();
  for (const auto& c : path.cells) j["cells"].push_back({c.x, c.y});
  j["resolution"] = path.resolution;
  return j.dump();
}

Path path_from_json(const std::string& text) {
  Path path;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& c : j.at("cells")) path.cells.push_back({c.at(0), c.at(1)});
    path.resolution = j.at("resolution");
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("path json: ") + e.what());
  }
  return path;
}

}  // namespace barn
