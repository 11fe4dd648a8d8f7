#include "qcbm/bo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qcbm/angles.hpp"

namespace qcbm {

double expected_improvement(double mean, double variance, double best_cost) {
    const double gap = best_cost - mean;
    if (variance <= 0.0) return std::max(0.0, gap);
    const double s = std::sqrt(variance);
    const double z = gap / s;
    const double cdf = 0.5 * std::erfc(-z / std::numbers::sqrt2);
    const double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
    return std::max(0.0, gap * cdf + s * pdf);
}

double expected_improvement_at(const GpModel& gp, const std::vector<double>& angles,
                               double best_cost) {
    double mean = 0.0, variance = 0.0;
    gp.posterior(angles, mean, variance);
    return expected_improvement(mean, variance, best_cost);
}

namespace {

using Objective = std::function<double(const std::vector<double>&)>;

// Greedy coordinate pattern search on the torus, maximizing. Step halves
// whenever a full sweep makes no progress.
void pattern_search(const Objective& objective, std::vector<double>& x, double& fx,
                    double min_step, int max_evals) {
    double step = std::numbers::pi / 2.0;
    int evals = 0;
    while (step >= min_step && evals < max_evals) {
        bool improved = false;
        for (std::size_t d = 0; d < x.size() && evals < max_evals; ++d) {
            for (double sign : {+1.0, -1.0}) {
                std::vector<double> y = x;
                y[d] = principal_angle(y[d] + sign * step);
                const double fy = objective(y);
                ++evals;
                if (fy > fx) {
                    x = std::move(y);
                    fx = fy;
                    improved = true;
                    break; // keep sweeping from the improved point
                }
            }
        }
        if (!improved) step *= 0.5;
    }
}

} // namespace

std::vector<std::vector<double>> propose_batch(const GpModel& gp,
                                               const AcquisitionConfig& config,
                                               double best_cost, std::uint64_t rng_seed) {
    if (config.batch_size < 1) {
        throw std::invalid_argument("propose_batch: batch_size must be >= 1");
    }
    const int dim = gp.angle_dimension();
    const double rho = std::max(1e-3, config.penalizer_scale * gp.params().length_scale);

    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> angle_dist(0.0, two_pi);
    auto random_point = [&] {
        std::vector<double> x(dim);
        for (auto& v : x) v = angle_dist(rng);
        return x;
    };

    std::vector<std::vector<double>> batch;
    for (int member = 0; member < config.batch_size; ++member) {
        auto objective = [&](const std::vector<double>& x) {
            double value = expected_improvement_at(gp, x, best_cost);
            for (const auto& chosen : batch) {
                const double d = embedded_distance(x, chosen);
                value *= 1.0 - std::exp(-d * d / (2.0 * rho * rho));
            }
            return value;
        };

        std::vector<std::vector<double>> starts;
        starts.push_back(gp.best_input());
        for (int s = 0; s < config.starts; ++s) starts.push_back(random_point());

        std::vector<double> scores(starts.size());
        for (std::size_t i = 0; i < starts.size(); ++i) scores[i] = objective(starts[i]);

        std::vector<std::size_t> order(starts.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

        const int n_refine = std::min<int>(config.refine_top, static_cast<int>(starts.size()));
        const int refine_evals = config.max_refine_evals_per_dim * dim;
        std::vector<double> best_point = starts[order[0]];
        double best_score = scores[order[0]];
        for (int r = 0; r < n_refine; ++r) {
            std::vector<double> x = starts[order[r]];
            double fx = scores[order[r]];
            pattern_search(objective, x, fx, config.min_step, refine_evals);
            if (fx > best_score) {
                best_score = fx;
                best_point = std::move(x);
            }
        }

        // Penalization keeps members apart whenever EI is informative; if the
        // acquisition degenerates to a flat zero, fall back to random points.
        auto too_close = [&](const std::vector<double>& x) {
            return std::any_of(batch.begin(), batch.end(), [&](const auto& c) {
                return embedded_distance(x, c) <= 1e-6;
            });
        };
        while (too_close(best_point)) best_point = random_point();
        batch.push_back(std::move(best_point));
    }
    return batch;
}

} // namespace qcbm
