#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spidict/error.hpp"

namespace spidict {

// Dense row-major matrix of doubles. Deliberately minimal: the pipeline
// only needs row access, element access and a handful of hand-written
// kernels that live next to their callers.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

    bool empty() const { return data.empty(); }
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw Error(Errc::dimension_mismatch,
                    "dot: lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

} // namespace spidict
