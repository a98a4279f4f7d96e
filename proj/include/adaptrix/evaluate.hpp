#ifndef ADAPTRIX_EVALUATE_HPP
#define ADAPTRIX_EVALUATE_HPP

#include "adaptrix/common.hpp"
#include "adaptrix/dataset.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace adaptrix {

// ---- K-means -------------------------------------------------------------

struct KMeansOptions {
    int restarts = 10;
    int max_iterations = 300;
    /// Lloyd stops once no centroid moves farther than this.
    double tolerance = 1e-6;
};

struct KMeansResult {
    Labels labels;
    Matrix centroids;
    double inertia = 0.0;
    int iterations = 0;
    /// Inertia after each assignment step of the returned run.
    std::vector<double> inertia_history;
};

/// k-means++ seeding and Lloyd iterations, best of `restarts` by inertia.
/// Restart r draws from derive_seed(seed, r), so the result does not depend
/// on the thread count.
KMeansResult kmeans(const Matrix& data, Index k, std::uint64_t seed, const KMeansOptions& options = {});

// ---- external clustering metrics -------------------------------------------

/// Class-by-cluster counts. Label values are compacted in ascending order.
struct Contingency {
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> counts;
    long long total = 0;
};

Contingency contingency(const Labels& truth, const Labels& pred);

double adjusted_rand_index(const Labels& truth, const Labels& pred);

struct ClusterEval {
    double ari = 0.0;
    double homogeneity = 0.0;
    double completeness = 0.0;
    double v_measure = 0.0;
};

/// Homogeneity, completeness and V-measure (entropies in nats); `ari` left 0.
ClusterEval homogeneity_completeness_v(const Labels& truth, const Labels& pred);

/// All four metrics.
ClusterEval cluster_eval(const Labels& truth, const Labels& pred);

// ---- supervised ------------------------------------------------------------

struct LogisticModel {
    /// (d + 1) x C; row 0 is the intercept.
    Eigen::MatrixXd weights;
    /// Original label of each column.
    std::vector<int> classes;
    int iterations = 0;
    double gradient_norm = 0.0;  ///< infinity norm at return
    bool converged = false;
    /// Stopped at max_iter with every training point classified correctly:
    /// the unpenalized likelihood has no maximizer.
    bool separation_warning = false;
};

/// Unpenalized multinomial logistic regression fitted by full-batch gradient
/// descent with backtracking on the mean negative log-likelihood.
LogisticModel logistic_fit(const Matrix& x, const Labels& y, int max_iter = 2000, double tol = 1e-5);

/// Mean negative log-likelihood and its gradient at `weights`.
double logistic_loss(const Matrix& x, const std::vector<int>& y_index, const Eigen::MatrixXd& weights,
                     Eigen::MatrixXd* gradient);

Labels classify(const LogisticModel& model, const Matrix& x);

double accuracy(const Labels& truth, const Labels& pred);
double f1_macro(const Labels& truth, const Labels& pred);

// ---- resampling ------------------------------------------------------------

/// Trains on `train` and predicts labels for the rows of `test`.
using SupervisedPipeline = std::function<Labels(const PointCloud& train, const Matrix& test)>;

struct FoldMetrics {
    double accuracy = 0.0;
    double f1_macro = 0.0;
    Index n_train = 0;
    Index n_test = 0;
};

struct CvReport {
    std::vector<FoldMetrics> folds;
    double mean_accuracy = 0.0;
    double mean_f1 = 0.0;
    bool stratified = true;
    std::vector<std::string> warnings;
};

/// Test-index sets of m folds. Stratified by label unless some class has fewer
/// than m members, in which case `stratified` is cleared and the split is
/// a plain shuffled partition.
std::vector<std::vector<Index>> make_folds(const Labels& y, Index m, std::uint64_t seed,
                                           bool* stratified = nullptr);

CvReport kfold_cv(const PointCloud& cloud, Index m, const SupervisedPipeline& pipeline,
                  std::uint64_t seed);

/// `repeats` stratified random splits holding out `test_fraction` of the points.
CvReport holdout(const PointCloud& cloud, double test_fraction, Index repeats,
                 const SupervisedPipeline& pipeline, std::uint64_t seed);

}  // namespace adaptrix

#endif  // ADAPTRIX_EVALUATE_HPP
