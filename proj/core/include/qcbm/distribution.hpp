#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcbm/statevector.hpp"

namespace qcbm {

/// Probabilities over n-bit strings, indexed by the integer value of the
/// bitstring (qubit 0 = most significant bit, matching StateVector).
struct Distribution {
    int n_bits = 0;
    std::vector<double> probs;

    Distribution() = default;
    Distribution(int n_bits_, std::vector<double> probs_);

    std::size_t size() const { return probs.size(); }
    double operator[](std::size_t i) const { return probs[i]; }
    double sum() const;

    static Distribution uniform(int n_bits);
};

/// Exact Born-rule distribution of a normalized state.
Distribution probabilities(const StateVector& state);

/// Finite-shot measurement record.
struct Counts {
    std::uint64_t shots = 0;
    std::map<std::uint32_t, std::uint64_t> histogram; // basis index -> count

    std::uint64_t count(std::uint32_t basis_index) const;
    Distribution to_distribution(int n_bits) const;
};

/// Draws `shots` i.i.d. samples from the state's Born distribution.
/// Deterministic for a fixed seed (mt19937_64 + inverse CDF).
Counts sample(const StateVector& state, std::uint64_t shots, std::uint64_t rng_seed);

/// Draws from an explicit distribution instead of a state.
Counts sample(const Distribution& dist, std::uint64_t shots, std::uint64_t rng_seed);

/// Global depolarizing mixture: P' = (1-lambda) P + lambda U with
/// lambda = 1 - (1 - per_gate_error)^gate_count. Deterministic.
Distribution apply_depolarizing(const Distribution& dist, double per_gate_error,
                                int gate_count);

/// Counter-based per-evaluation seed derivation (splitmix64 of base + index).
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index);

/// "0101"-style label of a basis index, qubit 0 first.
std::string bitstring_label(std::uint32_t basis_index, int n_bits);

} // namespace qcbm
