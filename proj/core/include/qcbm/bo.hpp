#pragma once

#include <cstdint>
#include <vector>

#include "qcbm/gp.hpp"

namespace qcbm {

/// Closed-form Expected Improvement for minimization:
/// EI = (best - mu) Phi(z) + s phi(z), z = (best - mu)/s; max(0, best - mu)
/// when the posterior is deterministic (s = 0). Always >= 0.
double expected_improvement(double mean, double variance, double best_cost);

double expected_improvement_at(const GpModel& gp, const std::vector<double>& angles,
                               double best_cost);

struct AcquisitionConfig {
    int batch_size = 5;
    int starts = 32;          // random multi-starts for the inner maximization
    int refine_top = 3;       // pattern-search refinement of the best starts
    double min_step = 4e-3;   // pattern-search step floor (radians)
    int max_refine_evals_per_dim = 40;
    double penalizer_scale = 1.0; // penalization radius = scale * length_scale
};

/// Proposes `batch_size` candidates. The first maximizes EI via multi-start
/// coordinate pattern search on the torus; later members maximize EI damped
/// by a local penalization factor 1 - exp(-d^2 / (2 rho^2)) around each
/// already-chosen member (embedded distance d). Members are pairwise
/// distinct (embedded distance > 1e-6) and the result is deterministic for
/// a fixed seed and surrogate.
std::vector<std::vector<double>> propose_batch(const GpModel& gp,
                                               const AcquisitionConfig& config,
                                               double best_cost, std::uint64_t rng_seed);

} // namespace qcbm
