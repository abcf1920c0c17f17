#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "barn/grid.hpp"

namespace barn {

// "BARN1" map text format.
//
//   BARN1 <width> <height> <resolution>
//   # optional comment lines
//   <height> rows of <width> characters, '1' occupied / '0' free, row 0 first
//
// The parser rejects any other cell character, ragged rows, and trailing
// garbage.  Comment lines are only allowed between the header and the rows.

OccupancyGrid parse_grid_text(std::string_view text);
std::string grid_to_text(const OccupancyGrid& grid, std::string_view comment = {});

OccupancyGrid load_grid(const std::filesystem::path& path);
void save_grid(const std::filesystem::path& path, const OccupancyGrid& grid,
               std::string_view comment = {});

// Binary PGM (P5, maxval 255): 0 = occupied, 255 = free.
std::string grid_to_pgm(const OccupancyGrid& grid);
void save_grid_pgm(const std::filesystem::path& path, const OccupancyGrid& grid);

// Shortest decimal rendering of a double that parses back to the same value.
std::string format_double(double value);

// Reads a whole file / writes a whole file, throwing IoError on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace barn
