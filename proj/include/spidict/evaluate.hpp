#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "spidict/dataset.hpp"
#include "spidict/eigen.hpp"
#include "spidict/noise.hpp"
#include "spidict/patterns.hpp"
#include "spidict/reconstruct.hpp"

namespace spidict {

struct EvalRow {
    std::string category;
    Method method = Method::pca;
    std::size_t coefficients = 0;
    std::size_t projections = 0;
    double mean_psnr_db = 0.0;
    std::size_t n_images = 0;
};

struct EvalReport {
    std::string category;
    std::vector<EvalRow> rows;
};

struct EvalOptions {
    std::vector<std::size_t> k_list; // ascending
    NoiseConfig noise;
    TruncationBounds bounds;
    std::string category = "uncategorized";
    int threads = 1;
};

// Mean PSNR over the test set for every entry of k_list, each method on
// two counting axes: the entry taken as a coefficient count, and the
// entry taken as a projection budget (PCA spends 2 projections per
// coefficient, four-step Fourier 4). Rows record the actual counts used.
EvalReport evaluate(const ImageDictionary& test, const EigenBasis& basis, const FourierPlan& plan,
                    const EvalOptions& options);

// Mean PSNR for one method at an exact coefficient count (0 = the zero
// reconstruction). Exposed for targeted comparisons.
double mean_psnr_at(const ImageDictionary& test, const EigenBasis& basis, const FourierPlan& plan,
                    Method method, std::size_t coefficients, const EvalOptions& options);

void write_report_csv(std::ostream& out, const EvalReport& report);

} // namespace spidict
