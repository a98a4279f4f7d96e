#ifndef ADAPTRIX_LLE_HPP
#define ADAPTRIX_LLE_HPP

#include "adaptrix/common.hpp"
#include "adaptrix/dataset.hpp"
#include "adaptrix/embedding.hpp"
#include "adaptrix/graph.hpp"
#include "adaptrix/linalg.hpp"
#include "adaptrix/neighbors.hpp"

#include <Eigen/SparseCore>

#include <span>

namespace adaptrix {

struct LleOptions {
    /// Throw when the directed neighbour graph has more than one closed class
    /// (the embedding then has several trivial solutions). Otherwise the
    /// condition is reported as a warning on the embedding.
    bool strict_connectivity = false;
    EigsOptions eigs;
    Execution exec = Execution::parallel;
};

/// Reconstruction weights: row i holds the affine weights of x_i over its
/// k_star[i] nearest neighbours.
SparseWeights lle_weights(const PointCloud& cloud, const NeighborTable& table,
                          std::span<const Index> k_star, Execution exec = Execution::parallel);

/// M = (I - W)^T (I - W).
Eigen::SparseMatrix<double> lle_cost_matrix(const SparseWeights& w);

/// Adaptive LLE: per-point neighbourhood sizes k_star, output dimension d_proj.
/// Columns are centred, orthogonal, of squared norm n.
Embedding lle_star(const PointCloud& cloud, std::span<const Index> k_star, Index d_proj,
                   const LleOptions& options = {});

/// Same as lle_star with every neighbourhood of size k.
Embedding lle_fixed(const PointCloud& cloud, Index k, Index d_proj, const LleOptions& options = {});

/// Bottom d_proj eigen-directions of M orthogonal to the constant vector,
/// scaled to unit covariance, signs canonical.
Matrix lle_embed_from_cost(const Eigen::SparseMatrix<double>& m, Index d_proj,
                           const EigsOptions& eigs = {});

}  // namespace adaptrix

#endif  // ADAPTRIX_LLE_HPP
