#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "spidict/dataset.hpp"
#include "spidict/noise.hpp"

namespace spidict {

// One experiment: a dataset, a category split, the coefficient counts to
// sweep and where results go. Loaded from a flat key = value file.
struct RunConfig {
    std::filesystem::path images_path;
    std::filesystem::path labels_path; // empty when unlabeled
    std::string category = "uncategorized";
    SplitConfig split;
    std::vector<std::size_t> k_list; // normalized to sorted unique
    NoiseConfig noise;
    std::filesystem::path out_dir = "out";
};

// Recognized keys: images, labels, category, label_filter, train_count,
// test_count, balance, shuffle, seed, k_list, noise, sigma, out_dir.
// Unknown keys are rejected. Referenced files must exist.
RunConfig load_config(const std::filesystem::path& path);

} // namespace spidict
