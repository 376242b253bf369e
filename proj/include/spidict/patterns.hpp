#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "spidict/eigen.hpp"
#include "spidict/matrix.hpp"

namespace spidict {

// Non-negative display patterns p_k = q_k / (2 s_k) + 1/2 with per-row
// scale s_k = max |q_k|. The complement of a pattern is 1 - p elementwise;
// 2 p_k - 1 recovers q_k / s_k.
struct DisplayPatternSet {
    Matrix patterns;            // K x N, values in [0, 1]
    std::vector<double> scales; // length K, all > 0
    std::size_t width = 0;
    std::size_t height = 0;

    std::size_t count() const { return patterns.rows; }
};

DisplayPatternSet normalize_patterns(const EigenBasis& basis, std::size_t k_count);

struct FreqPair {
    std::size_t u = 0; // vertical frequency, 0 <= u < Y
    std::size_t v = 0; // horizontal frequency, 0 <= v < X

    bool operator==(const FreqPair&) const = default;
};

// Four-step phase shifts applied to every sampled frequency.
inline constexpr std::array<double, 4> kFourierPhases = {
    0.0, 1.5707963267948966, 3.141592653589793, 4.71238898038469};

// Frequencies in zig-zag order over anti-diagonals u+v starting at DC,
// odd diagonals with u ascending, even with u descending. Of each
// conjugate pair (u,v) ~ ((Y-u)%Y, (X-v)%X) only the first one reached
// is kept; real objects make the mirror redundant.
struct FourierPlan {
    std::vector<FreqPair> order;
    std::size_t width = 0;  // X
    std::size_t height = 0; // Y

    std::size_t count() const { return order.size(); }
};

FourierPlan zigzag_order(std::size_t width, std::size_t height, std::size_t c_count);

// Largest usable coefficient count for zigzag_order on an X x Y grid.
std::size_t max_fourier_coefficients(std::size_t width, std::size_t height);

// Sinusoid 1/2 + 1/2 cos(2 pi (u y / Y + v x / X) + phase), row-major.
std::vector<double> fourier_pattern(std::size_t u, std::size_t v, double phase, std::size_t width,
                                    std::size_t height);

} // namespace spidict
