#ifndef ADAPTRIX_DATASET_HPP
#define ADAPTRIX_DATASET_HPP

#include "adaptrix/common.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace adaptrix {

/// An n x D sample with optional integer class labels.
///
/// Construction validates the invariants: n >= 2, D >= 1, every coordinate
/// finite, labels (when present) non-negative and of length n.
class PointCloud {
public:
    PointCloud(Matrix coords, std::optional<Labels> labels = std::nullopt);

    Index size() const { return coords_.rows(); }
    Index dim() const { return coords_.cols(); }

    const Matrix& coords() const { return coords_; }
    auto point(Index i) const { return coords_.row(i); }

    bool has_labels() const { return labels_.has_value(); }
    const Labels& labels() const;
    const std::optional<Labels>& maybe_labels() const { return labels_; }

    /// Rows `rows` of this cloud, labels carried along.
    PointCloud subset(const std::vector<Index>& rows) const;

private:
    Matrix coords_;
    std::optional<Labels> labels_;
};

struct CsvOptions {
    bool has_labels = false;  ///< last column holds integer labels
    char delimiter = ',';
    bool skip_header = false;
};

PointCloud load_csv(const std::filesystem::path& path, const CsvOptions& options = {});
/// Same as load_csv on an already-open stream; `source` names it in errors.
PointCloud parse_csv(std::istream& in, const CsvOptions& options, const std::string& source);

/// The classic 150 x 4 Iris sample with its three species labels, compiled in.
PointCloud load_iris();

/// Writes one CSV row per observation using the shortest round-trip
/// representation of each value. Labels, when given, become the last column.
void save_matrix(const std::filesystem::path& path, const Matrix& m,
                 const std::optional<Labels>& labels = std::nullopt);
void write_matrix(std::ostream& out, const Matrix& m,
                  const std::optional<Labels>& labels = std::nullopt);

enum class ManifoldKind { torus = 0, spiral = 1, sphere = 2 };

struct ManifoldSpec {
    Index points_per_manifold = 1700;
    double noise_sigma = 0.05;
    Index n_noise_dims = 17;
    std::uint64_t seed = 0;
    /// Common scale factor applied to every shape before noise is added.
    double scale = 3.0;
    std::vector<ManifoldKind> kinds = {ManifoldKind::torus, ManifoldKind::spiral,
                                       ManifoldKind::sphere};
};

// Shape constants before scaling.
inline constexpr double kTorusMajorRadius = 2.0;
inline constexpr double kTorusMinorRadius = 0.7;

/// Torus, spiral and sphere samples in R^3, Gaussian noise on the signal
/// coordinates and `n_noise_dims` pure-noise coordinates. Labels are the
/// ManifoldKind values; rows are shuffled deterministically by the seed.
PointCloud generate_manifolds(const ManifoldSpec& spec);

}  // namespace adaptrix

#endif  // ADAPTRIX_DATASET_HPP
