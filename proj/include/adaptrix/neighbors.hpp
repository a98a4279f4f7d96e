#ifndef ADAPTRIX_NEIGHBORS_HPP
#define ADAPTRIX_NEIGHBORS_HPP

#include "adaptrix/common.hpp"
#include "adaptrix/dataset.hpp"

#include <memory>
#include <span>
#include <vector>

namespace adaptrix {

struct Neighbor {
    Index index;
    double distance;
};

/// Per-point neighbor lists sorted by ascending Euclidean distance (ties by
/// ascending index), self excluded. Column j holds the (j+1)-th neighbor.
class NeighborTable {
public:
    NeighborTable() = default;
    NeighborTable(Index n, Index depth, std::vector<Index> ids, std::vector<double> dists);

    Index size() const { return n_; }
    Index depth() const { return depth_; }

    std::span<const Index> ids(Index i) const
    {
        return {ids_.data() + i * depth_, static_cast<std::size_t>(depth_)};
    }
    std::span<const double> dists(Index i) const
    {
        return {dists_.data() + i * depth_, static_cast<std::size_t>(depth_)};
    }
    Index id(Index i, Index j) const { return ids_[static_cast<std::size_t>(i * depth_ + j)]; }
    double dist(Index i, Index j) const
    {
        return dists_[static_cast<std::size_t>(i * depth_ + j)];
    }

    bool operator==(const NeighborTable&) const = default;

private:
    Index n_ = 0;
    Index depth_ = 0;
    std::vector<Index> ids_;
    std::vector<double> dists_;
};

/// Exact Euclidean k-NN index over a fixed set of points. Uses a k-d tree for
/// ambient dimension <= kTreeMaxDim and a linear scan above it.
class KnnIndex {
public:
    static constexpr Index kTreeMaxDim = 15;

    explicit KnnIndex(const Matrix& points);
    ~KnnIndex();
    KnnIndex(KnnIndex&&) noexcept;
    KnnIndex& operator=(KnnIndex&&) noexcept;

    Index size() const { return points_.rows(); }
    Index dim() const { return points_.cols(); }
    bool uses_tree() const { return tree_ != nullptr; }

    /// The k nearest stored points to q, optionally skipping one stored index.
    std::vector<Neighbor> query(std::span<const double> q, Index k, Index exclude = -1) const;

private:
    struct Tree;
    Matrix points_;
    std::unique_ptr<Tree> tree_;
};

/// Builds the depth-K table for every point of the cloud.
NeighborTable build_neighbor_table(const PointCloud& cloud, Index depth,
                                   Execution exec = Execution::parallel);

/// Serial all-pairs reference: full distance rows sorted per point.
NeighborTable build_neighbor_table_bruteforce(const PointCloud& cloud, Index depth);

/// The k nearest cloud points to q (q itself is not excluded).
std::vector<Neighbor> query_knn(const PointCloud& cloud, std::span<const double> q, Index k);

/// Euclidean distance with a fixed summation order, so d(a,b) == d(b,a) exactly.
double euclidean(std::span<const double> a, std::span<const double> b);

}  // namespace adaptrix

#endif  // ADAPTRIX_NEIGHBORS_HPP
