#pragma once

#include <cstdint>

namespace spidict {

// Detector noise model. Samples are drawn per physical projection from a
// counter-based stream keyed on (seed, coefficient, projection), so the
// same configuration reproduces the same measurements regardless of
// evaluation order or thread count.
struct NoiseConfig {
    enum class Kind { none, additive_gaussian };

    Kind kind = Kind::none;
    double sigma = 0.0;
    std::uint64_t seed = 0;

    bool enabled() const { return kind != Kind::none && sigma > 0.0; }

    // NoiseConfig for a specific object in a batch: stays deterministic
    // while decorrelating streams across images.
    NoiseConfig for_stream(std::uint64_t stream) const;

    // Standard normal for draw `draw` of coefficient stream `stream`.
    double standard_normal(std::uint64_t stream, std::uint64_t draw) const;
};

} // namespace spidict
