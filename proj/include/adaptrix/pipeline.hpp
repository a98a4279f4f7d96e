#ifndef ADAPTRIX_PIPELINE_HPP
#define ADAPTRIX_PIPELINE_HPP

#include "adaptrix/common.hpp"
#include "adaptrix/dataset.hpp"
#include "adaptrix/embedding.hpp"
#include "adaptrix/idestim.hpp"
#include "adaptrix/lle.hpp"
#include "adaptrix/spectral.hpp"
#include "adaptrix/umap.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adaptrix {

enum class Method { lle, spectral, umap };

Method parse_method(std::string_view name);
std::string method_name(Method m);

/// How neighbourhood sizes are chosen: per point by ABIDE, one fixed k, or
/// the median of ABIDE's k*.
struct KPolicy {
    enum class Kind { adaptive, fixed, median };
    Kind kind = Kind::adaptive;
    Index k = 0;

    static KPolicy adaptive() { return {}; }
    static KPolicy fixed(Index k) { return {Kind::fixed, k}; }
    static KPolicy median() { return {Kind::median, 0}; }
    /// "adaptive", "median" or a positive integer.
    static KPolicy parse(std::string_view text);
    std::string describe() const;
};

struct ReduceConfig {
    AbideConfig abide;
    LleOptions lle;
    SpectralOptions spectral;
    UmapConfig umap;
    KPolicy policy;
    Execution exec = Execution::parallel;
};

struct ReduceResult {
    AbideResult estimate;
    Embedding embedding;
    /// Neighbourhood sizes handed to the embedder.
    std::vector<Index> k_used;
    double estimate_seconds = 0.0;
    double embed_seconds = 0.0;
};

/// ABIDE, then the chosen embedder at d* (or d_override) with k* or the
/// policy's fixed sizes. Errors carry the failing stage in their message.
ReduceResult adaptive_reduce(const PointCloud& cloud, Method method, std::optional<Index> d_override,
                             const ReduceConfig& config = {});

/// Embedding only, for a known k vector and dimension.
Embedding embed(const PointCloud& cloud, Method method, const std::vector<Index>& k, Index d_proj,
                const ReduceConfig& config = {});

struct KStarSummary {
    double median = 0.0;
    double mean = 0.0;
    double stddev = 0.0;  ///< population standard deviation
    Index min = 0;
    Index max = 0;
    /// Freedman-Diaconis bins spanning [min, max], last bin closed.
    std::vector<double> bin_edges;
    std::vector<Index> counts;
};

KStarSummary kstar_summary(const std::vector<Index>& k_star);

/// Rounded median of k*.
Index median_k(const std::vector<Index>& k_star);

}  // namespace adaptrix

#endif  // ADAPTRIX_PIPELINE_HPP
