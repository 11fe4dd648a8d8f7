#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace qcbm {

struct PsoConfig {
    double c1 = 1.0;            // cognition coefficient
    double c2 = 1.0;            // social coefficient
    double w = 0.5;             // inertia
    int particles_per_dim = 2;  // swarm size = particles_per_dim * dimension
    double v_init_half_range = 0.7853981633974483; // velocities start in [-pi/4, pi/4]
};

struct Particle {
    std::vector<double> position;       // principal values in [0, 2pi)
    std::vector<double> velocity;
    std::vector<double> best_position;
    double best_cost = std::numeric_limits<double>::infinity();
};

/// Particle swarm over periodic angle parameters. Displacements toward the
/// personal and global bests are angular (signed minor arc), and positions
/// are kept in [0, 2pi).
///
/// Each step evaluates the current positions, updates the bests on strict
/// improvement, then moves:
///   v <- w v + c1 r1 disp(theta, p_best) + c2 r2 disp(theta, g)
///   theta <- principal(theta + v)
/// with fresh r1, r2 per particle and coordinate each iteration.
class Swarm {
  public:
    using CostFn = std::function<double(const std::vector<double>&)>;

    Swarm(int dimension, std::uint64_t seed, PsoConfig config = {});

    /// Runs one iteration. If max_evaluations >= 0, evaluates at most that
    /// many particles (bests still update; the move is skipped when the
    /// budget truncates the sweep). Returns the number of evaluations used.
    int step(const CostFn& cost, int max_evaluations = -1);

    int dimension() const { return dimension_; }
    int iteration() const { return iteration_; }
    const std::vector<Particle>& particles() const { return particles_; }
    const std::vector<double>& best_position() const { return global_best_position_; }
    double best_cost() const { return global_best_cost_; }

  private:
    int dimension_;
    PsoConfig config_;
    std::vector<Particle> particles_;
    std::vector<double> global_best_position_;
    double global_best_cost_ = std::numeric_limits<double>::infinity();
    int iteration_ = 0;
    std::mt19937_64 rng_;
};

} // namespace qcbm
