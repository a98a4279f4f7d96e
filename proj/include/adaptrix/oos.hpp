#ifndef ADAPTRIX_OOS_HPP
#define ADAPTRIX_OOS_HPP

#include "adaptrix/common.hpp"
#include "adaptrix/dataset.hpp"
#include "adaptrix/embedding.hpp"
#include "adaptrix/idestim.hpp"
#include "adaptrix/lle.hpp"
#include "adaptrix/neighbors.hpp"

#include <optional>
#include <span>
#include <vector>

namespace adaptrix {

/// A training sample with its LLE embedding, ready to place new points.
///
/// Adaptive models pick each test point's neighbourhood size with the
/// likelihood-ratio rule at the frozen training dimension; fixed models use
/// the same k for every test point.
class TrainedModel {
public:
    TrainedModel(PointCloud train, Embedding embedding, int d_star, AbideConfig config,
                 std::vector<Index> train_k_star, std::optional<Index> fixed_k = std::nullopt);

    const PointCloud& train() const { return train_; }
    const Embedding& embedding() const { return embedding_; }
    int d_star() const { return d_star_; }
    const AbideConfig& config() const { return config_; }
    const std::vector<Index>& train_k_star() const { return train_k_star_; }
    std::optional<Index> fixed_k() const { return fixed_k_; }
    Index median_k_star() const { return median_k_; }

    const KnnIndex& index() const { return index_; }
    /// Training neighbour table of depth k_max + 1 (empty for fixed models).
    const NeighborTable& train_table() const { return table_; }
    double threshold() const { return threshold_; }

private:
    PointCloud train_;
    Embedding embedding_;
    int d_star_;
    AbideConfig config_;
    std::vector<Index> train_k_star_;
    std::optional<Index> fixed_k_;
    Index median_k_ = 0;
    KnnIndex index_;
    NeighborTable table_;
    double threshold_ = 0.0;
};

/// ABIDE on the training sample, then LLE* at d* (or d_override).
TrainedModel fit_lle_star(const PointCloud& train, const AbideConfig& config = {},
                          std::optional<Index> d_override = std::nullopt, const LleOptions& lle = {});

/// Fixed-k LLE at dimension d_proj.
TrainedModel fit_lle_fixed(const PointCloud& train, Index k, Index d_proj, const LleOptions& lle = {});

struct Projection {
    Vector y;
    Index k = 0;
    /// The test never triggered; k is the rounded median training k*.
    bool fallback = false;
    /// The reconstruction system was degenerate and solved by regularization.
    bool degenerate = false;
};

Projection project_test_point_detail(const TrainedModel& model, std::span<const double> x);
Vector project_test_point(const TrainedModel& model, std::span<const double> x);

/// Row-wise project_test_point; each row is placed independently.
Matrix project_batch(const TrainedModel& model, const Matrix& x, Execution exec = Execution::parallel);

}  // namespace adaptrix

#endif  // ADAPTRIX_OOS_HPP
