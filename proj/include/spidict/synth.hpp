#pragma once

#include <cstdint>
#include <filesystem>

#include "spidict/idx.hpp"

namespace spidict {

// Procedurally rendered 28x28 image sets in the official IDX layout, for
// running the pipeline when the real MNIST-family files are not on disk.
// Classes are parametric silhouettes with per-image jitter, so each label
// forms a coherent category; labels follow the Fashion-MNIST convention
// (1 = trouser, 9 = ankle boot). Images are interleaved label 0..9,0..9,...
// and fully determined by the seed.
struct SynthSet {
    RawIdxImages images;
    RawIdxLabels labels;
};

SynthSet synth_fashion(std::size_t per_class, std::uint64_t seed);
SynthSet synth_digits(std::size_t per_class, std::uint64_t seed);

// Writes root/fashion/train-images-idx3-ubyte (+labels) and the digits
// equivalents.
void write_synth_tree(const std::filesystem::path& root, std::size_t fashion_per_class,
                      std::size_t digits_per_class, std::uint64_t seed);

} // namespace spidict
