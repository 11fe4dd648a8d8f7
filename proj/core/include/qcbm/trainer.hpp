#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcbm/ansatz.hpp"
#include "qcbm/bo.hpp"
#include "qcbm/distribution.hpp"
#include "qcbm/gp.hpp"
#include "qcbm/objective.hpp"
#include "qcbm/pso.hpp"

namespace qcbm {

enum class Connectivity { ALL_TO_ALL, STAR };
enum class OptimizerKind { PSO, BO };

struct AnsatzConfig {
    Connectivity connectivity = Connectivity::ALL_TO_ALL;
    int n_layers = 2;
    bool drop_first_z = true;
    int star_center = 0;
    std::vector<int> pixel_map; // empty = identity
};

struct BoConfig {
    int initial_design = 10;     // seeded random evaluations before the first fit
    AcquisitionConfig acquisition;
    GpFitConfig fit;
    int refit_dense_until = 200; // refit hyperparameters every iteration up to here
    int refit_every_late = 5;    // then only every this many iterations
    int late_restarts = 2;       // likelihood restarts when warm-starting late refits
};

struct ExperimentConfig {
    int rows = 2;
    int cols = 2;
    AnsatzConfig ansatz;
    OptimizerKind optimizer = OptimizerKind::BO;
    std::optional<CostKind> cost_kind; // unset: PSO->CLIPPED_NLL, BO->CLIPPED_SYM_KL
    double epsilon = 1e-4;
    std::uint64_t shots = 5000;
    int evaluation_budget = 500;
    std::uint64_t optimizer_seed = 1;
    std::uint64_t sampling_seed = 1;
    double per_gate_error = 0.0; // depolarizing knob; 0 disables
    bool exact_mode = false;
    PsoConfig pso;
    BoConfig bo;

    int n_qubits() const { return rows * cols; }
    CostKind resolved_cost_kind() const;
    CostConfig cost_config() const;
};

AnsatzSpec make_ansatz(const ExperimentConfig& config);

struct EvaluationRow {
    int index = 0;
    double cost = 0.0;
    double best_so_far = 0.0;
    std::vector<double> params;
};

struct FinalReport {
    std::vector<double> best_params;
    double best_cost = 0.0;
    Distribution distribution; // pixel-space model distribution the metrics use
    MetricsReport metrics;
    std::uint64_t metric_shots = 0;
};

struct TrainingRecord {
    std::vector<EvaluationRow> rows;
    FinalReport final;
    bool completed = true;
    std::string failure_reason;

    std::vector<double> best_so_far_curve() const;
};

/// One circuit evaluation: instantiate, simulate, sample (or take exact
/// probabilities), apply the optional depolarizing mixture, and score
/// against the BAS target. Deterministic given (sampling_seed, eval_index).
/// Returns the cost and the pixel-space counts (empty in exact mode).
std::pair<double, Counts> evaluate_candidate(const ExperimentConfig& config,
                                             const AnsatzSpec& spec,
                                             const std::vector<double>& params,
                                             std::uint64_t eval_index);

/// The full DDQCL loop of the configured optimizer, recording every
/// evaluation until the budget is exhausted; on optimizer numerical failure
/// the partial record is returned with completed=false. `on_evaluation`,
/// when set, observes rows as they are produced (the CLI streams them to
/// disk).
TrainingRecord run_ddqcl(const ExperimentConfig& config,
                         const std::function<void(const EvaluationRow&)>& on_evaluation = {});

struct SeedScanResult {
    std::vector<std::uint64_t> optimizer_seeds;
    std::vector<std::uint64_t> sampling_seeds;
    std::vector<std::vector<double>> best_so_far; // [seed][evaluation index]
    std::vector<double> p5, median, p95;          // pointwise over seeds
};

/// Runs run_ddqcl once per derived seed pair and aggregates the best-so-far
/// curves into pointwise median and 5th/95th percentile series.
SeedScanResult seed_scan(const ExperimentConfig& config, int n_seeds, int n_threads = 1);

/// Linear-interpolation quantile of a sample (q in [0,1]).
double quantile(std::vector<double> values, double q);

} // namespace qcbm
