#pragma once

#include "ncosc/wavefunctions.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace ncosc {

// round-trip-exact formatting for floats written to text outputs
std::string format_double(double v);

// 16-bit binary PGM (P5), big-endian samples, values scaled so the grid
// maximum maps to 65535; header_lines become '#' comments after the magic
void write_pgm16(std::ostream& os, const DensityGrid& grid,
                 const std::vector<std::string>& header_lines);

// x,y,value rows over the same grid, '#' comment header
void write_density_csv(std::ostream& os, const DensityGrid& grid,
                       const std::vector<std::string>& header_lines);

}  // namespace ncosc
