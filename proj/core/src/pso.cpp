#include "qcbm/pso.hpp"

#include <stdexcept>

#include "qcbm/angles.hpp"

namespace qcbm {

Swarm::Swarm(int dimension, std::uint64_t seed, PsoConfig config)
    : dimension_(dimension), config_(config), rng_(seed) {
    if (dimension < 1) {
        throw std::invalid_argument("Swarm: dimension must be >= 1");
    }
    if (config_.particles_per_dim < 1) {
        throw std::invalid_argument("Swarm: particles_per_dim must be >= 1");
    }
    const int n_particles = config_.particles_per_dim * dimension;
    std::uniform_real_distribution<double> pos_dist(0.0, two_pi);
    std::uniform_real_distribution<double> vel_dist(-config_.v_init_half_range,
                                                    config_.v_init_half_range);
    particles_.resize(n_particles);
    for (auto& p : particles_) {
        p.position.resize(dimension);
        p.velocity.resize(dimension);
        for (int d = 0; d < dimension; ++d) p.position[d] = pos_dist(rng_);
        for (int d = 0; d < dimension; ++d) p.velocity[d] = vel_dist(rng_);
        p.best_position = p.position;
    }
    global_best_position_.assign(dimension, 0.0);
}

int Swarm::step(const CostFn& cost, int max_evaluations) {
    const int n_particles = static_cast<int>(particles_.size());
    const int n_evals = max_evaluations < 0
                            ? n_particles
                            : std::min(max_evaluations, n_particles);

    for (int i = 0; i < n_evals; ++i) {
        auto& p = particles_[i];
        const double c = cost(p.position);
        if (c < p.best_cost) {
            p.best_cost = c;
            p.best_position = p.position;
        }
        if (c < global_best_cost_) {
            global_best_cost_ = c;
            global_best_position_ = p.position;
        }
    }
    if (n_evals < n_particles) return n_evals; // budget ran out mid-sweep

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto& p : particles_) {
        for (int d = 0; d < dimension_; ++d) {
            const double r1 = unit(rng_);
            const double r2 = unit(rng_);
            const double to_personal = angular_displacement(p.position[d], p.best_position[d]);
            const double to_global = angular_displacement(p.position[d], global_best_position_[d]);
            p.velocity[d] = config_.w * p.velocity[d] + config_.c1 * r1 * to_personal +
                            config_.c2 * r2 * to_global;
            p.position[d] = principal_angle(p.position[d] + p.velocity[d]);
        }
    }
    ++iteration_;
    return n_evals;
}

} // namespace qcbm
