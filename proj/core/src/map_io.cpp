#include "barn/map_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace barn {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", value);
  if (std::strtod(buf, nullptr) != value) {
    std::snprintf(buf, sizeof(buf), "%.17g", value);
  }
  return buf;
}

OccupancyGrid parse_grid_text(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw FormatError("map: empty input");

  std::istringstream header{std::string(lines[0])};
  std::string magic;
  int width = 0, height = 0;
  double resolution = 0.0;
  std::string trailing;
  header >> magic >> width >> height >> resolution;
  if (!header || magic != "BARN1" || (header >> trailing))
    throw FormatError("map: bad header line, expected 'BARN1 <w> <h> <res>'");
  if (width <= 0 || height <= 0 || !(resolution > 0.0))
    throw FormatError("map: non-positive dimensions or resolution");

  std::size_t row_start = 1;
  while (row_start < lines.size() && !lines[row_start].empty() && lines[row_start][0] == '#')
    ++row_start;

  if (lines.size() - row_start < static_cast<std::size_t>(height))
    throw FormatError("map: fewer rows than header height");

  OccupancyGrid grid(width, height, resolution);
  for (int y = 0; y < height; ++y) {
    const auto row = lines[row_start + y];
    if (row.size() != static_cast<std::size_t>(width))
      throw FormatError("map: ragged row at y=" + std::to_string(y));
    for (int x = 0; x < width; ++x) {
      const char c = row[x];
      if (c == '1')
        grid.set_occupied(x, y, true);
      else if (c != '0')
        throw FormatError(std::string("map: invalid cell character '") + c + "'");
    }
  }
  for (std::size_t i = row_start + height; i < lines.size(); ++i) {
    if (!lines[i].empty()) throw FormatError("map: trailing content after rows");
  }
  return grid;
}

std::string grid_to_text(const OccupancyGrid& grid, std::string_view comment) {
  std::string out = "BARN1 " + std::to_string(grid.width()) + " " +
                    std::to_string(grid.height()) + " " + format_double(grid.resolution()) + "\n";
  if (!comment.empty()) {
    out += "# ";
    out += comment;
    out += "\n";
  }
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) out += grid.occupied(x, y) ? '1' : '0';
    out += '\n';
  }
  return out;
}

OccupancyGrid load_grid(const std::filesystem::path& path) {
  return parse_grid_text(read_file(path));
}

void save_grid(const std::filesystem::path& path, const OccupancyGrid& grid,
               std::string_view comment) {
  write_file(path, grid_to_text(grid, comment));
}

std::string grid_to_pgm(const OccupancyGrid& grid) {
  std::string out = "P5\n" + std::to_string(grid.width()) + " " +
                    std::to_string(grid.height()) + "\n255\n";
  out.reserve(out.size() + grid.cell_count());
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x)
      out += static_cast<char>(grid.occupied(x, y) ? 0 : 255);
  }
  return out;
}

void save_grid_pgm(const std::filesystem::path& path, const OccupancyGrid& grid) {
  write_file(path, grid_to_pgm(grid));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace barn
