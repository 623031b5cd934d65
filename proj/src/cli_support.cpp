#include "ncosc/cli_support.hpp"

#include <cmath>
#include <cstdio>

namespace ncosc {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_pgm16(std::ostream& os, const DensityGrid& grid,
                 const std::vector<std::string>& header_lines) {
    os << "P5\n";
    for (const auto& line : header_lines) os << "# " << line << '\n';
    os << grid.resolution << ' ' << grid.resolution << "\n65535\n";
    const double scale = grid.max_value > 0.0 ? 65535.0 / grid.max_value : 0.0;
    std::string row(static_cast<std::size_t>(grid.resolution) * 2, '\0');
    for (int i = 0; i < grid.resolution; ++i) {
        for (int j = 0; j < grid.resolution; ++j) {
            const double v = grid.values[static_cast<std::size_t>(i) * grid.resolution + j];
            long pixel = std::lround(v * scale);
            pixel = std::min(65535L, std::max(0L, pixel));
            row[2 * j] = static_cast<char>((pixel >> 8) & 0xff);
            row[2 * j + 1] = static_cast<char>(pixel & 0xff);
        }
        os.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

void write_density_csv(std::ostream& os, const DensityGrid& grid,
                       const std::vector<std::string>& header_lines) {
    for (const auto& line : header_lines) os << "# " << line << '\n';
    os << "x,y,value\n";
    const double step = 2.0 * grid.radius / grid.resolution;
    for (int i = 0; i < grid.resolution; ++i) {
        const double y = grid.radius - (i + 0.5) * step;
        for (int j = 0; j < grid.resolution; ++j) {
            const double x = -grid.radius + (j + 0.5) * step;
            os << format_double(x) << ',' << format_double(y) << ','
               << format_double(grid.values[static_cast<std::size_t>(i) * grid.resolution + j])
               << '\n';
        }
    }
}

}  // namespace ncosc
