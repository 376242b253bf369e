#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace spidict {

// IDX is the binary container used by the MNIST-family datasets:
// big-endian 32-bit header words followed by a raw unsigned-byte payload.
//   images: magic 0x00000803, count, rows, cols, then count*rows*cols bytes
//   labels: magic 0x00000801, count, then count bytes
inline constexpr std::uint32_t kIdxImagesMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelsMagic = 0x00000801;

struct RawIdxImages {
    std::uint32_t magic = kIdxImagesMagic;
    std::uint32_t count = 0;
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<std::uint8_t> pixels; // row-major, count*rows*cols
};

struct RawIdxLabels {
    std::uint32_t magic = kIdxLabelsMagic;
    std::uint32_t count = 0;
    std::vector<std::uint8_t> labels;
};

RawIdxImages parse_idx_images(std::span<const std::uint8_t> bytes);
RawIdxLabels parse_idx_labels(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> serialize_idx_images(const RawIdxImages& raw);
std::vector<std::uint8_t> serialize_idx_labels(const RawIdxLabels& raw);

RawIdxImages load_idx_images(const std::filesystem::path& path);
RawIdxLabels load_idx_labels(const std::filesystem::path& path);

void save_idx_images(const RawIdxImages& raw, const std::filesystem::path& path);
void save_idx_labels(const RawIdxLabels& raw, const std::filesystem::path& path);

} // namespace spidict
