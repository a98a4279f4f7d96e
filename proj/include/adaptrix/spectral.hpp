#ifndef ADAPTRIX_SPECTRAL_HPP
#define ADAPTRIX_SPECTRAL_HPP

#include "adaptrix/common.hpp"
#include "adaptrix/dataset.hpp"
#include "adaptrix/embedding.hpp"
#include "adaptrix/graph.hpp"
#include "adaptrix/linalg.hpp"

#include <Eigen/SparseCore>

#include <cstdint>
#include <span>

namespace adaptrix {

struct SpectralOptions {
    /// Scale every embedded row to unit length before clustering.
    bool row_normalize = true;
    /// Eigenvalues at or below this count as zero and are skipped.
    double zero_tolerance = 1e-8;
    EigsOptions eigs;
    Execution exec = Execution::parallel;
};

/// I - D^{-1/2} A D^{-1/2} for a symmetric non-negative A. Throws DataError
/// naming the first vertex of degree zero.
Eigen::SparseMatrix<double> normalized_laplacian(const SparseWeights& a);

/// Eigenvectors of the d_proj smallest non-zero eigenvalues of the normalized
/// Laplacian of `a`. A disconnected graph adds a warning to the result.
Embedding spectral_embed_graph(const SparseWeights& a, Index d_proj, const SpectralOptions& options = {});

/// Adaptive adjacency, or-symmetrized, then spectral_embed_graph.
Embedding spectral_embed_star(const PointCloud& cloud, std::span<const Index> k_star, Index d_proj,
                              const SpectralOptions& options = {});

/// spectral_embed_star with d_proj = d_star followed by K-means.
Labels spectral_cluster_star(const PointCloud& cloud, std::span<const Index> k_star, Index d_star,
                             Index n_clusters, std::uint64_t seed, const SpectralOptions& options = {});

}  // namespace adaptrix

#endif  // ADAPTRIX_SPECTRAL_HPP
