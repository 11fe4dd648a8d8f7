#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "qcbm/distribution.hpp"
#include "qcbm/statevector.hpp"

namespace qcbm {

enum class CostKind { KL, CLIPPED_NLL, CLIPPED_SYM_KL };

struct CostConfig {
    CostKind kind = CostKind::CLIPPED_SYM_KL;
    double epsilon = 1e-4;
};

std::string cost_kind_name(CostKind kind);

/// D_KL(p,q) = -sum_i p(i) log2(q(i)/p(i)). Terms with p(i)=0 contribute 0.
/// Throws DivergenceError if q(i)=0 somewhere p(i)>0.
double kl_divergence(const Distribution& p, const Distribution& q);

/// As above but with q floored at `epsilon` inside the log, so it is finite
/// for empirical q with holes in the support. This is the D_KL variant used
/// in metric reports.
double kl_divergence_clipped(const Distribution& p, const Distribution& q, double epsilon);

/// C_nll = -sum_i p(i) log2(max(eps, q(i))), p = target, q = model.
double clipped_nll(const Distribution& target, const Distribution& model, double epsilon);

/// D_KL(max(eps,p), max(eps,q)) + D_KL(max(eps,q), max(eps,p)); both
/// arguments clipped elementwise and used unnormalized.
double clipped_sym_kl(const Distribution& p, const Distribution& q, double epsilon);

/// Dispatches on config.kind; `target` is p, `model` is q.
double cost(const CostConfig& config, const Distribution& target, const Distribution& model);

/// F1 score of a shot histogram against the valid-pattern set:
/// precision = valid samples / shots, recall = distinct patterns seen / |set|.
double qbas_score(const Counts& counts, const std::set<std::uint32_t>& bas_set);

/// Von Neumann entropy (base-2) of the reduced state on `kept` qubits.
double entanglement_entropy(const StateVector& state, const std::vector<int>& kept);

/// Mean entropy over the three 2+2 bipartitions {01|23}, {02|13}, {03|12}
/// of a 4-qubit pure state.
double entanglement_entropy_avg(const StateVector& state);

struct MetricsReport {
    double d_kl = 0.0;                // clipped KL (q floored at epsilon)
    double qbas = 0.0;                // in [0,1]
    double entanglement_entropy = 0.0;
};

} // namespace qcbm
