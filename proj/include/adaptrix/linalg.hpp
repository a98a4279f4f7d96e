#ifndef ADAPTRIX_LINALG_HPP
#define ADAPTRIX_LINALG_HPP

#include "adaptrix/common.hpp"

#include <Eigen/SparseCore>

#include <span>

namespace adaptrix {

struct EigsOptions {
    /// Orders up to this size use a dense decomposition.
    Index dense_threshold = 800;
    int max_iterations = 2000;
    /// Target for ||M x - theta x|| relative to ||M||_F.
    double tolerance = 1e-12;
};

struct EigenPairs {
    Vector values;           ///< ascending
    Eigen::MatrixXd vectors;  ///< n x m, orthonormal columns
    int iterations = 0;       ///< 0 for the dense path
};

/// The m algebraically smallest eigenpairs of a symmetric matrix.
///
/// Large inputs use block inverse subspace iteration on M + delta I with a
/// sparse LDLT factorization; the block carries spare columns so repeated
/// eigenvalues converge together.
EigenPairs sym_eigs_smallest(const Eigen::SparseMatrix<double>& m, Index count,
                             const EigsOptions& options = {});
EigenPairs sym_eigs_smallest(const Eigen::MatrixXd& m, Index count);

/// Affine reconstruction weights of x_i from the rows of `neighbors`
/// (sum to one), from the regularized local Gram system.
///
/// `degenerate`, when given, is set if x_i coincides with every neighbour or
/// the neighbours all coincide with each other.
Vector constrained_lsq_weights(std::span<const double> x_i, const Matrix& neighbors,
                               bool* degenerate = nullptr);

/// Gram regularization factor: 1e-3 when k > D, 1e-12 otherwise.
double gram_regularization(Index k, Index dim);

}  // namespace adaptrix

#endif  // ADAPTRIX_LINALG_HPP
