#ifndef ADAPTRIX_EMBEDDING_HPP
#define ADAPTRIX_EMBEDDING_HPP

#include "adaptrix/common.hpp"

#include <string>
#include <vector>

namespace adaptrix {

/// Low-dimensional coordinates y_1..y_n, one row per input point.
struct Embedding {
    Matrix coords;
    /// e.g. "lle*", "lle(k=5)", "spectral*", "umap*".
    std::string method;
    std::vector<std::string> warnings;

    Index size() const { return coords.rows(); }
    Index d_proj() const { return coords.cols(); }
};

/// Flips each column so its largest-magnitude entry is positive (first such
/// entry on ties).
void canonical_signs(Eigen::Ref<Eigen::MatrixXd> v);

}  // namespace adaptrix

#endif  // ADAPTRIX_EMBEDDING_HPP
