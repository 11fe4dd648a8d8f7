#include "qcbm/objective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "qcbm/errors.hpp"

namespace qcbm {

namespace {

void check_same_dim(const Distribution& p, const Distribution& q, const char* what) {
    if (p.size() != q.size()) {
        throw std::invalid_argument(std::string(what) + ": distribution sizes differ");
    }
}

// -sum_i a(i) log2(b(i)/a(i)) over entries with a(i) > 0; works on
// unnormalized non-negative vectors (used for the clipped variants).
double kl_terms(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0.0) acc += a[i] * std::log2(b[i] / a[i]);
    }
    return -acc;
}

} // namespace

std::string cost_kind_name(CostKind kind) {
    switch (kind) {
    case CostKind::KL: return "kl";
    case CostKind::CLIPPED_NLL: return "clipped_nll";
    case CostKind::CLIPPED_SYM_KL: return "clipped_sym_kl";
    }
    return "unknown";
}

double kl_divergence(const Distribution& p, const Distribution& q) {
    check_same_dim(p, q, "kl_divergence");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.probs[i] > 0.0 && q.probs[i] <= 0.0) {
            throw DivergenceError("kl_divergence: q has zero mass on the support of p");
        }
    }
    return kl_terms(p.probs, q.probs);
}

double kl_divergence_clipped(const Distribution& p, const Distribution& q, double epsilon) {
    check_same_dim(p, q, "kl_divergence_clipped");
    std::vector<double> qc(q.probs);
    for (double& v : qc) v = std::max(epsilon, v);
    return kl_terms(p.probs, qc);
}

double clipped_nll(const Distribution& target, const Distribution& model, double epsilon) {
    check_same_dim(target, model, "clipped_nll");
    double acc = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        acc += target.probs[i] * std::log2(std::max(epsilon, model.probs[i]));
    }
    return -acc;
}

double clipped_sym_kl(const Distribution& p, const Distribution& q, double epsilon) {
    check_same_dim(p, q, "clipped_sym_kl");
    std::vector<double> pc(p.probs), qc(q.probs);
    for (double& v : pc) v = std::max(epsilon, v);
    for (double& v : qc) v = std::max(epsilon, v);
    return kl_terms(pc, qc) + kl_terms(qc, pc);
}

double cost(const CostConfig& config, const Distribution& target, const Distribution& model) {
    switch (config.kind) {
    case CostKind::KL: return kl_divergence(target, model);
    case CostKind::CLIPPED_NLL: return clipped_nll(target, model, config.epsilon);
    case CostKind::CLIPPED_SYM_KL: return clipped_sym_kl(target, model, config.epsilon);
    }
    throw std::invalid_argument("cost: unknown cost kind");
}

double qbas_score(const Counts& counts, const std::set<std::uint32_t>& bas_set) {
    if (counts.shots == 0) {
        throw std::invalid_argument("qbas_score: counts are empty");
    }
    std::uint64_t valid = 0;
    std::size_t distinct = 0;
    for (auto idx : bas_set) {
        const auto c = counts.count(idx);
        valid += c;
        if (c > 0) ++distinct;
    }
    const double precision = static_cast<double>(valid) / static_cast<double>(counts.shots);
    const double recall = static_cast<double>(distinct) / static_cast<double>(bas_set.size());
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

double entanglement_entropy(const StateVector& state, const std::vector<int>& kept) {
    const int n = state.n_qubits();
    for (int q : kept) {
        if (q < 0 || q >= n) throw std::invalid_argument("entanglement_entropy: bad qubit");
    }
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (std::find(kept.begin(), kept.end(), q) == kept.end()) traced.push_back(q);
    }

    const auto dim_a = std::size_t{1} << kept.size();
    const auto dim_b = std::size_t{1} << traced.size();
    Eigen::MatrixXcd m(dim_a, dim_b);
    for (std::size_t i = 0; i < state.size(); ++i) {
        std::size_t r = 0, c = 0;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if (i & (std::size_t{1} << (n - 1 - kept[k]))) r |= std::size_t{1} << (kept.size() - 1 - k);
        }
        for (std::size_t k = 0; k < traced.size(); ++k) {
            if (i & (std::size_t{1} << (n - 1 - traced[k]))) c |= std::size_t{1} << (traced.size() - 1 - k);
        }
        m(r, c) = state.amplitude(i);
    }

    const Eigen::MatrixXcd rho = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
    double entropy = 0.0;
    for (double lambda : solver.eigenvalues()) {
        if (lambda > 1e-12) entropy -= lambda * std::log2(lambda);
    }
    return entropy;
}

double entanglement_entropy_avg(const StateVector& state) {
    if (state.n_qubits() != 4) {
        throw std::invalid_argument("entanglement_entropy_avg: requires a 4-qubit state");
    }
    const std::vector<std::vector<int>> partitions = {{0, 1}, {0, 2}, {0, 3}};
    double acc = 0.0;
    for (const auto& kept : partitions) acc += entanglement_entropy(state, kept);
    return acc / static_cast<double>(partitions.size());
}

} // namespace qcbm
