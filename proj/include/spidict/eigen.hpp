#pragma once

#include <cstddef>
#include <filesystem>
#include <limits>
#include <vector>

#include "spidict/dataset.hpp"
#include "spidict/matrix.hpp"

namespace spidict {

// Dictionary with per-pixel (column) means removed.
struct CenteredDictionary {
    Matrix a;                 // M x N, every column sums to ~0
    std::vector<double> mean; // length N
    std::size_t width = 0;
    std::size_t height = 0;
};

// Orthonormal eigenvector rows of the dictionary covariance, eigenvalues
// in descending order. Rows are sign-canonicalized: the entry of largest
// magnitude (lowest index on ties) is non-negative.
struct EigenBasis {
    Matrix q;                        // K_avail x N, rows are eigenvectors
    std::vector<double> eigenvalues; // length K_avail, non-increasing
    std::vector<double> mean;        // length N, carried for diagnostics
    std::size_t width = 0;           // X
    std::size_t height = 0;          // Y

    std::size_t components() const { return q.rows; }
    std::size_t pixel_count() const { return q.cols; }
};

CenteredDictionary center(const ImageDictionary& dict);

// A^T A of the centered matrix; upper triangle computed, then mirrored.
Matrix covariance(const CenteredDictionary& centered);

inline constexpr std::size_t kAllComponents = std::numeric_limits<std::size_t>::max();

// Cyclic Jacobi on a symmetric matrix. Keeps the leading max_components
// eigenpairs after sorting. The returned basis has a zero mean vector and
// width = N, height = 1; callers with image context use build_basis.
EigenBasis eigendecompose(const Matrix& c, std::size_t max_components = kAllComponents,
                          std::size_t max_sweeps = 50);

// Same spectrum via the M x M Gram matrix A A^T; the nonzero eigenvectors
// are mapped back through A^T and renormalized. Preferable when M << N.
EigenBasis eigendecompose_dual(const CenteredDictionary& centered, std::size_t max_sweeps = 50);

// center -> covariance -> eigendecompose, retaining min(M, N) components
// and carrying the dictionary mean and image dimensions.
EigenBasis build_basis(const ImageDictionary& dict);

// Flat binary container, little-endian: u32 X, u32 Y, u32 K, then
// f64 eigenvalues[K], f64 Q[K*N] row-major, f64 mean[N]. Bit-exact
// round-trip.
void save_basis(const EigenBasis& basis, const std::filesystem::path& path);
EigenBasis load_basis(const std::filesystem::path& path);

} // namespace spidict
