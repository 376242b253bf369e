#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace spidict {

// Flags shared by every subcommand; empty/absent fields defer to the
// config file.
struct GlobalOpts {
    std::filesystem::path config_path;
    std::filesystem::path out_dir;     // overrides the config's out_dir
    std::optional<std::uint64_t> seed; // overrides split and noise seeds
    int threads = 1;
};

// Build the eigenbasis from the training split, serialize it and export
// the first ten display patterns as PGM files.
int cmd_design(const GlobalOpts& opts);

// Sweep every K in the config's k_list for both methods and write the
// mean-PSNR report CSV. With export_recon, the first test image is also
// reconstructed at every K for both methods.
int cmd_evaluate(const GlobalOpts& opts, bool export_recon);

// Simulate acquisition of one PGM image and write the reconstruction
// plus a metadata sidecar. method is "pca" or "fourier".
int cmd_reconstruct(const GlobalOpts& opts, const std::filesystem::path& image_path,
                    const std::string& method, std::size_t k,
                    const std::filesystem::path& output_path = {});

} // namespace spidict
