#ifndef ADAPTRIX_IDESTIM_HPP
#define ADAPTRIX_IDESTIM_HPP

#include "adaptrix/common.hpp"
#include "adaptrix/dataset.hpp"
#include "adaptrix/neighbors.hpp"

#include <span>
#include <string>
#include <vector>

namespace adaptrix {

struct AbideConfig {
    double alpha = 0.05;
    /// Radius ratio r_A / r_B of the nested balls.
    double tau = 0.5;
    double d_tolerance = 1e-3;
    int max_iterations = 100;
    Index k_min = 2;
    /// 0 selects min(n - 2, 1000).
    Index k_max = 0;
    /// Ball membership for the BIDE counts. Open balls (the default) count
    /// neighbours strictly inside r_B and tau * r_B; closed balls use
    /// k_B = k* and count boundary ties inside r_A.
    bool closed_balls = false;

    Index effective_k_max(Index n) const;
    /// Throws ArgumentError when a field is out of range for a sample of size n.
    void validate(Index n) const;
};

struct AbideResult {
    double d_hat = 0.0;
    int d_star = 0;
    std::vector<Index> k_star;
    /// d_0 followed by every computed iterate; stops early once the iterates
    /// repeat exactly.
    std::vector<double> trace;
    bool converged = false;
    /// Points whose test never triggered in the final pass (k* = k_max).
    Index n_fallback = 0;
    std::vector<std::string> warnings;
};

double unit_ball_volume(double d);
double log_unit_ball_volume(double d);

/// v_j = Omega_d (r_j^d - r_{j-1}^d) with r_0 = 0.
std::vector<double> shell_volumes(std::span<const double> radii, double d);

/// Likelihood-ratio statistic for equal Poisson intensity in two k-point
/// balls of volumes vi and vj.
double lrt_statistic(Index k, double vi, double vj);

/// Same statistic from the log-volume gap |ln vi - ln vj|, stable for tiny gaps.
double lrt_from_log_gap(Index k, double log_gap);

/// Inverse CDF of the chi-square distribution with one degree of freedom.
double chi2_quantile_1df(double p);

/// First k in [k_min, k_max] whose statistic reaches `threshold`, k_max if none.
Index select_k_star(const NeighborTable& table, Index i, double d, double threshold,
                    const AbideConfig& config);

std::vector<Index> select_k_star_all(const NeighborTable& table, double d, double threshold,
                                     const AbideConfig& config,
                                     Execution exec = Execution::parallel);

struct BideEstimate {
    double d = 0.0;
    /// Sum k_A equalled sum k_B, so the ratio carried no information.
    bool ratio_one = false;
};

BideEstimate bide(std::span<const Index> k_a, std::span<const Index> k_b, double tau);

struct BallCounts {
    std::vector<Index> k_a;
    std::vector<Index> k_b;
};

/// k_A and k_B for every point given its outer-ball order k_b_order[i].
BallCounts ball_counts(const NeighborTable& table, std::span<const Index> k_b_order,
                       const AbideConfig& config, Execution exec = Execution::parallel);

AbideResult abide(const PointCloud& cloud, const AbideConfig& config = {},
                  Execution exec = Execution::parallel);

/// ABIDE on a prebuilt table of depth >= k_max + 1.
AbideResult abide(const NeighborTable& table, const AbideConfig& config = {},
                  Execution exec = Execution::parallel);

}  // namespace adaptrix

#endif  // ADAPTRIX_IDESTIM_HPP
