#ifndef ADAPTRIX_GRAPH_HPP
#define ADAPTRIX_GRAPH_HPP

#include "adaptrix/common.hpp"
#include "adaptrix/neighbors.hpp"

#include <Eigen/SparseCore>

#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace adaptrix {

/// Square sparse matrix in compressed-row form with sorted column indices.
class SparseWeights {
public:
    using Entry = std::pair<Index, double>;

    SparseWeights() = default;

    /// Rows given as unsorted (column, weight) lists. Duplicates are an error;
    /// self-loops are an error unless `allow_self`.
    static SparseWeights from_rows(Index n, const std::vector<std::vector<Entry>>& rows,
                                   bool allow_self = false);

    Index size() const { return n_; }
    Index nnz() const { return static_cast<Index>(cols_.size()); }

    std::span<const Index> cols(Index i) const
    {
        return {cols_.data() + ptr_[static_cast<std::size_t>(i)],
                static_cast<std::size_t>(row_nnz(i))};
    }
    std::span<const double> vals(Index i) const
    {
        return {vals_.data() + ptr_[static_cast<std::size_t>(i)],
                static_cast<std::size_t>(row_nnz(i))};
    }
    Index row_nnz(Index i) const
    {
        return ptr_[static_cast<std::size_t>(i) + 1] - ptr_[static_cast<std::size_t>(i)];
    }

    /// Stored weight at (i, j), 0 when absent.
    double get(Index i, Index j) const;
    double row_sum(Index i) const;
    bool is_symmetric() const;
    SparseWeights transpose() const;

    Eigen::SparseMatrix<double> to_eigen() const;

    bool operator==(const SparseWeights&) const = default;

private:
    Index n_ = 0;
    std::vector<Index> ptr_{0};
    std::vector<Index> cols_;
    std::vector<double> vals_;
};

/// Row i has weight 1 at the k_star[i] nearest neighbours of i.
SparseWeights adaptive_adjacency(const NeighborTable& table, std::span<const Index> k_star);

enum class SymMode { max_or, min_and, mean, fuzzy_union };

/// Accepts "or", "and", "mean" and "fuzzy_union".
SymMode parse_sym_mode(std::string_view name);

SparseWeights symmetrize(const SparseWeights& a, SymMode mode);

/// One "i,j,w" line per stored entry.
void write_edges_csv(std::ostream& out, const SparseWeights& w);

/// Connected components of the undirected support; labels[i] in [0, count).
Index connected_components(const SparseWeights& w, std::vector<Index>* labels = nullptr);

/// Closed classes of the directed support: strongly connected components with
/// no edge leaving them. Each one adds a null vector to I - W for a
/// row-stochastic W.
Index closed_classes(const SparseWeights& w);

}  // namespace adaptrix

#endif  // ADAPTRIX_GRAPH_HPP
