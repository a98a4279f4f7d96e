#ifndef ADAPTRIX_UMAP_HPP
#define ADAPTRIX_UMAP_HPP

#include "adaptrix/common.hpp"
#include "adaptrix/dataset.hpp"
#include "adaptrix/embedding.hpp"
#include "adaptrix/graph.hpp"
#include "adaptrix/neighbors.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace adaptrix {

struct UmapConfig {
    int n_epochs = 500;
    double learning_rate = 1.0;
    int negative_samples = 5;
    double min_dist = 0.1;
    double spread = 1.0;
    /// Curve parameters of phi(r) = 1 / (1 + a r^{2b}); 0 fits them from
    /// min_dist and spread.
    double curve_a = 0.0;
    double curve_b = 0.0;
    std::uint64_t seed = 0;
    Execution exec = Execution::parallel;
    /// Called after every epoch with the epoch number and current layout.
    std::function<void(int, const Matrix&)> observer;
};

struct CurveParams {
    double a = 0.0;
    double b = 0.0;
};

/// Least-squares fit of phi to 1 on [0, min_dist] and exp(-(r - min_dist) / spread)
/// beyond, sampled on 300 points of [0, 3 spread].
CurveParams fit_curve(double min_dist, double spread);

struct LocalScale {
    double rho = 0.0;
    double sigma = 0.0;
    /// The fuzzy-cardinality target was out of reach and sigma sits on a
    /// bracket end.
    bool clamped = false;
};

/// rho = first strictly positive distance among the first k; sigma solves
/// sum_j exp(-max(0, d_j - rho) / sigma) = log2(k) by bisection.
LocalScale local_connectivity(std::span<const double> dists, Index k);

struct FuzzyGraph {
    SparseWeights directed;
    SparseWeights symmetric;
    std::vector<LocalScale> scales;
};

FuzzyGraph fuzzy_graph_detail(const PointCloud& cloud, std::span<const Index> k_star,
                              Execution exec = Execution::parallel);

/// Directed membership strengths over the k*_i neighbours, fuzzy-union symmetrized.
SparseWeights fuzzy_graph_star(const PointCloud& cloud, std::span<const Index> k_star,
                               Execution exec = Execution::parallel);

/// Sequential SGD on the fuzzy cross-entropy, deterministic given config.seed.
Embedding optimize_layout(const SparseWeights& w_sym, Index d_proj, const UmapConfig& config,
                          const Embedding& init);

/// Spectral coordinates on the support of w_sym rescaled to [0, 10] per
/// column; uniform [-10, 10] noise from the seed if the graph cannot be embedded.
Embedding umap_initialize(const SparseWeights& w_sym, Index d_proj, std::uint64_t seed);

Embedding umap_star(const PointCloud& cloud, std::span<const Index> k_star, Index d_proj,
                    const UmapConfig& config = {});

/// Sum of the fuzzy cross-entropy over every pair, edges of w_sym weighted by
/// membership. Quadratic in n; meant for small checks.
double umap_cross_entropy(const SparseWeights& w_sym, const Matrix& y, CurveParams curve);

}  // namespace adaptrix

#endif  // ADAPTRIX_UMAP_HPP
