#ifndef RIGPCA_PCA_HPP
#define RIGPCA_PCA_HPP

#include <cstddef>
#include <vector>

#include "rigpca/matrix.hpp"

namespace rigpca {

struct SymmetricEigen {
    std::vector<double> values; // descending
    Matrix vectors;             // column k is the unit eigenvector of values[k]
};

// Cyclic Jacobi eigendecomposition of a symmetric matrix. Deterministic:
// fixed sweep order, no threading. Converges when the off-diagonal
// Frobenius norm falls below 1e-12 times the matrix Frobenius norm;
// gives up (NumericalError) after 100*n^2 rotations.
SymmetricEigen symmetric_eigendecomposition(const Matrix& m);

// Pearson correlation matrix of the columns. Requires >= 2 observations and
// no constant column (the offending attribute is named in the error).
Matrix correlation_matrix(const Matrix& data);

struct PcaModel {
    std::size_t n_attributes = 0;
    std::vector<double> column_means;
    std::vector<double> column_stds;       // sample std, n-1 denominator
    std::vector<double> eigenvalues;       // descending, tiny negatives clamped to 0
    Matrix components;                     // n x n, column k = unit eigenvector of PC k
    std::vector<double> variance_fraction; // lambda_k / sum(lambda)

    double eigenvalue_sum() const;
};

struct ScoreMatrix {
    Matrix scores; // observations x pc_count
    std::size_t pc_count = 0;
};

// Full-spectrum PCA of the column-standardized data (correlation matrix).
PcaModel fit(const Matrix& data);

// Cumulative fraction of variance explained by the first m PCs.
double variance_explained(const PcaModel& model, std::size_t m);

// Projections of (row - means)/stds onto the first m components.
ScoreMatrix scores(const PcaModel& model, const Matrix& data, std::size_t m);

// PCA of the transposed view: observations become attributes and vice
// versa, giving the original observations' coordinates in the dual space.
PcaModel dual_fit(const Matrix& data);

} // namespace rigpca

#endif
