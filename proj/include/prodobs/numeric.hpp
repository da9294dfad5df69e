#pragma once

#include "prodobs/graph.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prodobs {

// A numeric system x' = A x, y = C x whose zero pattern follows the graph.
struct WeightedRealization {
    Eigen::MatrixXd a_matrix;  // n x n, nonzero exactly on adjacency_pattern(g)
    Eigen::MatrixXd c_matrix;  // p x n, one unit entry per row
    std::vector<NodeIndex> observers;
    std::uint64_t seed = 0;
    double spectral_radius = 0.0;
    std::vector<std::string> warnings;

    std::size_t states() const { return static_cast<std::size_t>(a_matrix.rows()); }
};

// Nonzero weights are drawn uniformly from [-1, -0.1] U [0.1, 1]. With
// scale_unstable, A is multiplied by 1.1 / rho when rho <= 1 so that the
// realized dynamics are unstable; a graph without cycles has rho = 0 for
// every weighting and is left alone with a warning.
WeightedRealization realize_weights(const DiGraph& g, const std::vector<NodeIndex>& observers,
                                    std::uint64_t seed, bool scale_unstable);

// Output-selection matrix with one unit row per observer.
Eigen::MatrixXd selection_matrix(std::size_t n, const std::vector<NodeIndex>& observers);

struct RankResult {
    std::size_t rank = 0;
    double condition_number = 0.0;  // +inf when rank < n
};

// Rank of O = [C; CA; ...; CA^(n-1)] counting singular values at or above
// tolerance * sigma_max. Each block CA^k is normalised to unit norm while it
// is built (row scaling does not change the rank) and the log of the scale is
// kept, so the unscaled O is only formed for the condition number. Throws
// NumericOverflow when that is not representable.
RankResult observability_rank(const WeightedRealization& r, double tolerance = 1e-8);
RankResult observability_rank(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c, double tolerance = 1e-8);

// Rank only; never forms the unscaled matrix, so it cannot overflow.
std::size_t observability_rank_only(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c, double tolerance = 1e-8);

// x_{k+1} = (I + hA) x_k with h = 0.5 / ||A||_2.
struct Discretization {
    Eigen::MatrixXd a_d;
    double step = 0.0;
};
Discretization discretize(const Eigen::MatrixXd& a);

// Open-loop least-squares estimator over a window of n consecutive outputs.
class WindowEstimator {
public:
    WindowEstimator(const Eigen::MatrixXd& a_d, const Eigen::MatrixXd& c);

    std::size_t window() const noexcept { return window_; }
    // Stacked [y_k; y_{k+1}; ...; y_{k+n-1}] -> estimate of x_k.
    Eigen::VectorXd estimate_first(const Eigen::VectorXd& stacked) const;
    // Same window -> estimate of x_{k+n-1}.
    Eigen::VectorXd estimate_last(const Eigen::VectorXd& stacked) const;

    const Eigen::MatrixXd& observability() const noexcept { return obs_; }
    // Frobenius norm of the map from a stacked window to the latest state.
    double last_gain() const { return pinv_last_.norm(); }

private:
    std::size_t window_;
    Eigen::MatrixXd obs_;
    Eigen::MatrixXd pinv_;       // least-squares inverse of obs_
    Eigen::MatrixXd pinv_last_;  // a_d^(n-1) * pinv_
};

struct EstimationOptions {
    std::size_t trials = 100;
    std::size_t steps = 100;
    double x0_range = 5.0;
    double process_std = 0.05;
    double meas_std = 0.05;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct EstimationTrace {
    std::vector<double> msee;  // per step, averaged over trials
    std::size_t trials = 0;
    std::size_t steps = 0;
    double noise_std_process = 0.0;
    double noise_std_measurement = 0.0;
    double step_size = 0.0;
    double discrete_spectral_radius = 0.0;
    // First step at which double-precision round-off on the (growing) state
    // exceeds a tenth of the estimation error in some trial.
    std::optional<std::size_t> precision_limited_from;
};

// Monte-Carlo run of the window estimator on the discretised dynamics.
// Steps before the first full window use the initial batch estimate of x_0
// propagated forward; later steps re-solve on the latest n outputs. Trial t
// draws from its own seed, so the trace does not depend on thread count.
// Throws NotNumericallyObservable, InvalidArgument, DivergedEstimate.
EstimationTrace simulate_estimation(const WeightedRealization& r, const EstimationOptions& options);

struct CrossValidationEntry {
    std::uint64_t seed = 0;
    std::size_t numeric_rank = 0;
    bool numeric_observable = false;
    bool agrees = false;
};

struct CrossValidationReport {
    bool structural_observable = false;
    std::size_t n = 0;
    std::vector<CrossValidationEntry> entries;
    std::size_t agreements = 0;
    std::size_t disagreements = 0;
};

CrossValidationReport cross_validate(const DiGraph& g, const std::vector<NodeIndex>& observers,
                                     const std::vector<std::uint64_t>& seeds, double tolerance = 1e-8);

} // namespace prodobs
