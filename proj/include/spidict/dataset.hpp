#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spidict/idx.hpp"
#include "spidict/matrix.hpp"

namespace spidict {

// A stack of images, one per row, pixel values rescaled to [0, 1].
// width*height == images.cols always holds.
struct ImageDictionary {
    Matrix images;                    // M x N
    std::size_t width = 0;            // X (columns of one image)
    std::size_t height = 0;           // Y (rows of one image)
    std::vector<std::uint8_t> labels; // empty, or one tag per row
};

// How to carve a raw image file into disjoint train/test sets.
//
// Default selection is file order: first train_count matching images
// become the training set, the next test_count the test set. With
// shuffle=true the matching pool is permuted first (seeded, so still
// deterministic). With balance_per_label=true the counts are spread
// evenly across the labels involved, remainder to the lowest labels.
struct SplitConfig {
    std::vector<std::uint8_t> label_filter; // empty = accept every image
    std::size_t train_count = 0;
    std::size_t test_count = 0;
    bool balance_per_label = false;
    bool shuffle = false;
    std::uint64_t seed = 0;
};

std::pair<ImageDictionary, ImageDictionary>
to_dictionary(const RawIdxImages& raw, const RawIdxLabels* labels, const SplitConfig& cfg);

} // namespace spidict
