#pragma once

#include <cstdint>
#include <vector>

namespace spidict {

// splitmix64: tiny, portable, and good enough statistical quality for
// reproducible shuffles and noise streams. Implementation-defined std
// facilities (std::shuffle, std::normal_distribution) are avoided so a
// given seed produces identical results on every platform.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ b);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double u64_to_unit(std::uint64_t x) {
    return double(x >> 11) * 0x1.0p-53;
}

// Counter-based stream: value i of stream `stream` under `seed`.
inline std::uint64_t stream_u64(std::uint64_t seed, std::uint64_t stream, std::uint64_t i) {
    return splitmix64(mix64(mix64(seed, stream), i));
}

// Fisher-Yates with a counter-based source; deterministic across platforms.
template <typename T>
void seeded_shuffle(std::vector<T>& items, std::uint64_t seed) {
    if (items.size() < 2) return;
    for (std::size_t i = items.size() - 1; i > 0; --i) {
        const std::uint64_t r = stream_u64(seed, 0x73687566ULL, i); // "shuf"
        std::swap(items[i], items[std::size_t(r % (i + 1))]);
    }
}

} // namespace spidict
