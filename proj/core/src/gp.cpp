#include "qcbm/gp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>

#include "qcbm/errors.hpp"

namespace qcbm {

std::vector<double> torus_embed(const std::vector<double>& angles) {
    std::vector<double> out(2 * angles.size());
    for (std::size_t d = 0; d < angles.size(); ++d) {
        out[2 * d] = std::cos(angles[d]);
        out[2 * d + 1] = std::sin(angles[d]);
    }
    return out;
}

double embedded_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("embedded_distance: dimension mismatch");
    }
    double sq = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double dc = std::cos(a[d]) - std::cos(b[d]);
        const double ds = std::sin(a[d]) - std::sin(b[d]);
        sq += dc * dc + ds * ds;
    }
    return std::sqrt(sq);
}

double matern52(double r, double signal_variance, double length_scale) {
    constexpr double sqrt5 = 2.23606797749978969;
    const double z = sqrt5 * r / length_scale;
    return signal_variance * (1.0 + z + z * z / 3.0) * std::exp(-z);
}

namespace {

Eigen::MatrixXd embed_rows(const std::vector<std::vector<double>>& inputs) {
    const auto n = inputs.size();
    const auto d = inputs.front().size();
    Eigen::MatrixXd e(n, 2 * d);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = torus_embed(inputs[i]);
        for (std::size_t j = 0; j < row.size(); ++j) e(i, j) = row[j];
    }
    return e;
}

Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& e) {
    const auto n = e.rows();
    Eigen::MatrixXd dist(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        dist(i, i) = 0.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double r = (e.row(i) - e.row(j)).norm();
            dist(i, j) = r;
            dist(j, i) = r;
        }
    }
    return dist;
}

// Cholesky of the noisy covariance with jitter escalation. Returns the
// factorization and the log determinant, or nullopt if not PD at max jitter.
struct Factorization {
    Eigen::MatrixXd lower;
    double log_det;
};

std::optional<Factorization> factorize_covariance(const Eigen::MatrixXd& distances,
                                                  const KernelParams& p) {
    const auto n = distances.rows();
    Eigen::MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            const double v = matern52(distances(i, j), p.signal_variance, p.length_scale);
            k(i, j) = v;
            k(j, i) = v;
        }
        k(i, i) += p.noise_variance;
    }
    for (double jitter : {0.0, 1e-10, 1e-8, 1e-6}) {
        Eigen::MatrixXd kj = k;
        if (jitter > 0.0) kj.diagonal().array() += jitter;
        Eigen::LLT<Eigen::MatrixXd> llt(kj);
        if (llt.info() == Eigen::Success) {
            const Eigen::MatrixXd lower = llt.matrixL();
            double log_det = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) log_det += 2.0 * std::log(lower(i, i));
            return Factorization{lower, log_det};
        }
    }
    return std::nullopt;
}

std::optional<double> log_marginal(const Eigen::MatrixXd& distances, const Eigen::VectorXd& y,
                                   const KernelParams& p) {
    const auto fact = factorize_covariance(distances, p);
    if (!fact) return std::nullopt;
    const Eigen::VectorXd v = fact->lower.triangularView<Eigen::Lower>().solve(y);
    const double n = static_cast<double>(y.size());
    return -0.5 * v.squaredNorm() - 0.5 * fact->log_det - 0.5 * n * std::log(2.0 * std::numbers::pi);
}

// Nelder-Mead minimization in a box (coordinates clamped). Small and
// deterministic; adequate for the 3 log-hyperparameters.
using Vec3 = std::array<double, 3>;

Vec3 clamp_box(Vec3 x, const Vec3& lo, const Vec3& hi) {
    for (int i = 0; i < 3; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
    return x;
}

Vec3 nelder_mead(const std::function<double(const Vec3&)>& f, Vec3 x0, const Vec3& lo,
                 const Vec3& hi, int max_iters) {
    constexpr int n = 3;
    std::array<Vec3, n + 1> simplex;
    std::array<double, n + 1> value;
    simplex[0] = clamp_box(x0, lo, hi);
    for (int i = 0; i < n; ++i) {
        Vec3 p = simplex[0];
        p[i] += (p[i] + 0.4 <= hi[i]) ? 0.4 : -0.4; // keep the simplex non-degenerate
        simplex[i + 1] = clamp_box(p, lo, hi);
    }
    for (int i = 0; i <= n; ++i) value[i] = f(simplex[i]);

    auto order = [&] {
        std::array<int, n + 1> idx{0, 1, 2, 3};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return value[a] < value[b]; });
        std::array<Vec3, n + 1> s;
        std::array<double, n + 1> v;
        for (int i = 0; i <= n; ++i) {
            s[i] = simplex[idx[i]];
            v[i] = value[idx[i]];
        }
        simplex = s;
        value = v;
    };

    for (int iter = 0; iter < max_iters; ++iter) {
        order();
        Vec3 centroid{0, 0, 0};
        for (int i = 0; i < n; ++i) {
            for (int d = 0; d < 3; ++d) centroid[d] += simplex[i][d] / n;
        }
        auto along = [&](double t) {
            Vec3 p;
            for (int d = 0; d < 3; ++d) p[d] = centroid[d] + t * (centroid[d] - simplex[n][d]);
            return clamp_box(p, lo, hi);
        };
        const Vec3 reflected = along(1.0);
        const double fr = f(reflected);
        if (fr < value[0]) {
            const Vec3 expanded = along(2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                simplex[n] = expanded;
                value[n] = fe;
            } else {
                simplex[n] = reflected;
                value[n] = fr;
            }
        } else if (fr < value[n - 1]) {
            simplex[n] = reflected;
            value[n] = fr;
        } else {
            const Vec3 contracted = along(0.5);
            const double fc = f(contracted);
            if (fc < value[n]) {
                simplex[n] = contracted;
                value[n] = fc;
            } else {
                for (int i = 1; i <= n; ++i) { // shrink toward the best vertex
                    for (int d = 0; d < 3; ++d) {
                        simplex[i][d] = simplex[0][d] + 0.5 * (simplex[i][d] - simplex[0][d]);
                    }
                    value[i] = f(simplex[i]);
                }
            }
        }
    }
    order();
    return simplex[0];
}

} // namespace

GpModel GpModel::with_params(const std::vector<std::vector<double>>& inputs,
                             const std::vector<double>& targets, const KernelParams& params) {
    if (inputs.empty() || inputs.size() != targets.size()) {
        throw std::invalid_argument("GpModel: need >= 1 observation, one target per input");
    }
    if (params.signal_variance <= 0.0 || params.length_scale <= 0.0 ||
        params.noise_variance < 0.0) {
        throw std::invalid_argument("GpModel: kernel hyperparameters must be positive");
    }
    GpModel gp;
    gp.angle_dim_ = static_cast<int>(inputs.front().size());
    gp.inputs_ = inputs;
    gp.embedded_ = embed_rows(inputs);
    gp.distances_ = pairwise_distances(gp.embedded_);
    Eigen::VectorXd raw(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) raw(i) = targets[i];
    gp.y_mean_ = raw.mean();
    gp.y_ = raw.array() - gp.y_mean_;
    gp.best_index_ = static_cast<std::size_t>(
        std::min_element(targets.begin(), targets.end()) - targets.begin());
    gp.params_ = params;
    gp.condition();
    return gp;
}

GpModel GpModel::fit(const std::vector<std::vector<double>>& inputs,
                     const std::vector<double>& targets, const GpFitConfig& config,
                     const KernelParams* warm_start) {
    if (inputs.empty() || inputs.size() != targets.size()) {
        throw std::invalid_argument("GpModel: need >= 1 observation, one target per input");
    }
    const Eigen::MatrixXd embedded = embed_rows(inputs);
    const Eigen::MatrixXd distances = pairwise_distances(embedded);
    Eigen::VectorXd raw(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) raw(i) = targets[i];
    const double mean = raw.mean();
    const Eigen::VectorXd y = raw.array() - mean;

    const Vec3 lo{std::log(config.length_scale_min), std::log(config.signal_min),
                  std::log(config.noise_min)};
    const Vec3 hi{std::log(config.length_scale_max), std::log(config.signal_max),
                  std::log(config.noise_max)};

    auto objective = [&](const Vec3& x) {
        const KernelParams p{std::exp(x[1]), std::exp(x[0]), std::exp(x[2])};
        const auto lml = log_marginal(distances, y, p);
        return lml ? -*lml : std::numeric_limits<double>::infinity();
    };

    std::vector<Vec3> starts;
    if (warm_start) {
        starts.push_back(clamp_box(Vec3{std::log(warm_start->length_scale),
                                        std::log(warm_start->signal_variance),
                                        std::log(warm_start->noise_variance)},
                                   lo, hi));
    }
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int s = 0; s < config.restarts; ++s) {
        Vec3 x;
        for (int d = 0; d < 3; ++d) x[d] = lo[d] + unit(rng) * (hi[d] - lo[d]);
        starts.push_back(x);
    }

    Vec3 best_x{};
    double best_value = std::numeric_limits<double>::infinity();
    for (const auto& start : starts) {
        const Vec3 x = nelder_mead(objective, start, lo, hi, config.max_opt_iters);
        const double v = objective(x);
        if (v < best_value) {
            best_value = v;
            best_x = x;
        }
    }
    if (!std::isfinite(best_value)) {
        throw NumericalError("GpModel::fit: covariance not positive definite for any "
                             "hyperparameter candidate");
    }
    const KernelParams fitted{std::exp(best_x[1]), std::exp(best_x[0]), std::exp(best_x[2])};
    return with_params(inputs, targets, fitted);
}

void GpModel::condition() {
    const auto fact = factorize_covariance(distances_, params_);
    if (!fact) {
        throw NumericalError("GpModel: covariance not positive definite after jitter "
                             "escalation");
    }
    chol_lower_ = fact->lower;
    alpha_ = chol_lower_.triangularView<Eigen::Lower>().solve(y_);
    chol_lower_.triangularView<Eigen::Lower>().transpose().solveInPlace(alpha_);
    const Eigen::VectorXd v = chol_lower_.triangularView<Eigen::Lower>().solve(y_);
    const double n = static_cast<double>(y_.size());
    lml_ = -0.5 * v.squaredNorm() - 0.5 * fact->log_det -
           0.5 * n * std::log(2.0 * std::numbers::pi);
}

void GpModel::posterior(const std::vector<double>& angles, double& mean,
                        double& variance) const {
    if (static_cast<int>(angles.size()) != angle_dim_) {
        throw std::invalid_argument("GpModel::posterior: wrong input dimension");
    }
    const auto e = torus_embed(angles);
    Eigen::Map<const Eigen::RowVectorXd> ev(e.data(), static_cast<Eigen::Index>(e.size()));
    const auto n = embedded_.rows();
    Eigen::VectorXd k_star(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double r = (embedded_.row(i) - ev).norm();
        k_star(i) = matern52(r, params_.signal_variance, params_.length_scale);
    }
    mean = y_mean_ + k_star.dot(alpha_);
    const Eigen::VectorXd v = chol_lower_.triangularView<Eigen::Lower>().solve(k_star);
    variance = std::max(0.0, params_.signal_variance - v.squaredNorm());
}

double GpModel::posterior_mean(const std::vector<double>& angles) const {
    double mean = 0.0, variance = 0.0;
    posterior(angles, mean, variance);
    return mean;
}

const std::vector<double>& GpModel::best_input() const { return inputs_[best_index_]; }

} // namespace qcbm
