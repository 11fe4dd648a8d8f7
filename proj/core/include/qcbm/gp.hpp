#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qcbm {

/// Chordal torus embedding: each angle maps to (cos t, sin t), so distances
/// are continuous across the 0/2pi seam. Output length 2 * angles.size().
std::vector<double> torus_embed(const std::vector<double>& angles);

/// Euclidean distance between two angle vectors after embedding.
double embedded_distance(const std::vector<double>& a, const std::vector<double>& b);

struct KernelParams {
    double signal_variance = 1.0;
    double length_scale = 1.0;
    double noise_variance = 1e-4;
};

/// Matern 5/2 on distance r: s^2 (1 + sqrt5 r/l + 5 r^2 / (3 l^2)) exp(-sqrt5 r/l).
double matern52(double r, double signal_variance, double length_scale);

struct GpFitConfig {
    int restarts = 8;          // random multi-starts for the likelihood search
    int max_opt_iters = 60;    // Nelder-Mead iterations per start
    std::uint64_t seed = 0;
    double length_scale_min = 0.05, length_scale_max = 10.0;
    double signal_min = 1e-3, signal_max = 1e3;
    double noise_min = 1e-6, noise_max = 1.0;
};

/// Gaussian-process regression of costs over torus-embedded angle vectors,
/// with a constant mean fixed at the observation average. Covariance is
/// factorized once (Cholesky with jitter escalation 1e-10..1e-6; persistent
/// failure raises NumericalError).
class GpModel {
  public:
    /// Conditions on the data with fixed kernel hyperparameters.
    static GpModel with_params(const std::vector<std::vector<double>>& inputs,
                               const std::vector<double>& targets,
                               const KernelParams& params);

    /// Fits hyperparameters by maximizing the log marginal likelihood with
    /// multi-start Nelder-Mead over log-scaled bounds. `warm_start`, when
    /// given, is used as an extra start.
    static GpModel fit(const std::vector<std::vector<double>>& inputs,
                       const std::vector<double>& targets, const GpFitConfig& config,
                       const KernelParams* warm_start = nullptr);

    void posterior(const std::vector<double>& angles, double& mean, double& variance) const;
    double posterior_mean(const std::vector<double>& angles) const;

    const KernelParams& params() const { return params_; }
    double log_marginal_likelihood() const { return lml_; }
    int angle_dimension() const { return angle_dim_; }
    std::size_t n_observations() const { return inputs_.size(); }
    /// Observed input with the lowest target value.
    const std::vector<double>& best_input() const;

  private:
    GpModel() = default;
    void condition(); // factorize covariance and precompute alpha

    int angle_dim_ = 0;
    std::vector<std::vector<double>> inputs_;
    Eigen::MatrixXd embedded_;   // n x 2d
    Eigen::MatrixXd distances_;  // pairwise embedded distances
    Eigen::VectorXd y_;          // centered targets
    double y_mean_ = 0.0;
    std::size_t best_index_ = 0;
    KernelParams params_;
    Eigen::MatrixXd chol_lower_;
    Eigen::VectorXd alpha_;      // K^-1 (y - mean)
    double lml_ = 0.0;
};

} // namespace qcbm
