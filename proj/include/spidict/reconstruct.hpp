#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spidict/eigen.hpp"
#include "spidict/patterns.hpp"
#include "spidict/simulate.hpp"

namespace spidict {

// Post-processing window. Fixed bounds clip to [lo, hi]; percentile mode
// derives the bounds from the reconstruction itself.
struct TruncationBounds {
    double lo = 0.0;
    double hi = 1.0;
    bool use_percentiles = false;
    double lo_percent = 1.0;
    double hi_percent = 99.0;
};

struct ReconstructionResult {
    std::vector<double> image; // post-truncation, values in [0, 1]
    std::vector<double> raw;   // pre-truncation reconstruction
    Method method = Method::pca;
    std::size_t coefficients_used = 0;
    std::size_t projections_used = 0;
    double applied_lo = 0.0; // truncation window actually applied
    double applied_hi = 1.0;
    std::size_t width = 0;
    std::size_t height = 0;
};

// Truncated basis expansion sum_k w_k q_k. The dictionary mean is not
// added back: the measured coefficients already transform the raw image.
ReconstructionResult reconstruct_pca(const MeasurementSequence& meas, const EigenBasis& basis,
                                     const TruncationBounds& bounds = {});

// Fills the measured frequencies plus their conjugate mirrors into an
// otherwise zero spectrum and inverts (forward unnormalized, inverse
// carries 1/N); the imaginary residue is discarded.
ReconstructionResult reconstruct_fourier(const MeasurementSequence& meas, const FourierPlan& plan,
                                         const TruncationBounds& bounds = {});

// Clip to [lo, hi], then rescale affinely to [0, 1].
std::vector<double> truncate_contrast(std::span<const double> image, double lo, double hi);

// Linear-interpolation percentile (rank p/100 * (n-1)) of the values.
double percentile(std::span<const double> values, double percent);

// 10 log10(1 / MSE) for unit-range images; identical inputs give +inf.
double psnr(std::span<const double> reference, std::span<const double> candidate);

} // namespace spidict
