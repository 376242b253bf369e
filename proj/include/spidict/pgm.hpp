#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

namespace spidict {

struct PgmImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> pixels; // rescaled to [0, 1]
};

// 8-bit binary PGM (P5); values are quantized with round(255 * v) after
// clamping to [0, 1]. Export only; the simulator always consumes the
// unquantized values.
void write_pgm(const std::filesystem::path& path, std::size_t width, std::size_t height,
               std::span<const double> pixels);

PgmImage read_pgm(const std::filesystem::path& path);

} // namespace spidict
