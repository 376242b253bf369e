#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "spidict/noise.hpp"
#include "spidict/patterns.hpp"

namespace spidict {

enum class Method { pca, fourier };

const char* method_name(Method m);

// Ordered single-pixel coefficients for one object image. PCA entries are
// real (imaginary part zero); Fourier entries are the complex spectrum
// samples aligned with `freqs`.
struct MeasurementSequence {
    Method method = Method::pca;
    std::vector<std::complex<double>> coefficients;
    std::vector<FreqPair> freqs; // fourier only, same length as coefficients
    std::size_t coefficient_count = 0;
    std::size_t projections_used = 0;
    NoiseConfig noise;
    std::size_t width = 0;
    std::size_t height = 0;
};

// Bucket-detector model: one intensity per projected pattern.
double measure(std::span<const double> pattern, std::span<const double> object);

// Projects every pattern and its complement, differences the two
// intensities and rescales by the pattern amplitude, recovering the
// eigenbasis coefficient <q_k, I> in the noiseless case.
MeasurementSequence measure_pca(const DisplayPatternSet& patterns, std::span<const double> object,
                                const NoiseConfig& noise = {});

// Four-step phase shifting per planned frequency; the assembled
// coefficient equals the unnormalized 2-D DFT sample in the noiseless
// case (global scale factor 1 under this phase convention).
MeasurementSequence measure_fourier(const FourierPlan& plan, std::span<const double> object,
                                    const NoiseConfig& noise = {});

// Physical pattern displays needed for `count` coefficients.
std::size_t projection_budget(Method method, std::size_t count);

void write_measurement_csv(std::ostream& out, const MeasurementSequence& seq);

} // namespace spidict
