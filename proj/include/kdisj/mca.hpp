#pragma once

#include "kdisj/tables.hpp"

#include <cstddef>
#include <vector>

namespace kdisj {

// Minimal dense row-major matrix, enough for the eigenwork done here.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// S = D^c' D^c, the M x M symmetric positive semidefinite cross-product.
Matrix gram_matrix(const CorrectedTable& dc);

struct EigenResult {
    std::vector<double> values; // nonincreasing
    Matrix vectors;             // column a is the eigenvector of values[a]
};

// Cyclic Jacobi diagonalization, swept until the largest off-diagonal entry
// is below tol (at most 50 sweeps). Eigenpairs come back sorted by
// nonincreasing eigenvalue, ties keeping their pre-sort order, and each
// eigenvector is flipped so its largest-magnitude component is positive.
EigenResult eigensym(const Matrix& s, double tol = 1e-12);

struct MCAResult {
    std::vector<double> eigenvalues; // full raw spectrum, nonincreasing
    Matrix eigenvectors;             // M x M, columns match eigenvalues
    std::size_t n_axes_kept = 0;     // A
    Matrix individual_coords;        // N x A (F)
    Matrix modality_coords;          // M x A (G)
    std::vector<double> variance_share; // per kept axis
};

// Full spectrum of the gram matrix; the trivial leading axis (eigenvalue 1,
// eigenvector proportional to sqrt(d_.j)) is discarded along with numerically
// zero axes, keeping A = min(M - K, #remaining) informative ones.
// F = D^c V_kept, G = V_kept sqrt(diag(lambda)).
MCAResult run_mca(const CorrectedTable& dc);

enum class PointTag { Individual, Modality };

struct TaggedPoint {
    PointTag tag;
    std::size_t index; // row index for individuals, column index for modalities
    std::vector<double> coords;
};

// F rows then G rows, as one cloud of N + M points in A dimensions.
std::vector<TaggedPoint> joint_points(const MCAResult& res);

} // namespace kdisj
