#include "qcbm/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qcbm {

Distribution::Distribution(int n_bits_, std::vector<double> probs_)
    : n_bits(n_bits_), probs(std::move(probs_)) {
    if (probs.size() != (std::size_t{1} << n_bits)) {
        throw std::invalid_argument("Distribution: need 2^n_bits probabilities");
    }
}

double Distribution::sum() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
}

Distribution Distribution::uniform(int n_bits) {
    const std::size_t dim = std::size_t{1} << n_bits;
    return Distribution(n_bits, std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

Distribution probabilities(const StateVector& state) {
    return Distribution(state.n_qubits(), state.probabilities());
}

std::uint64_t Counts::count(std::uint32_t basis_index) const {
    auto it = histogram.find(basis_index);
    return it == histogram.end() ? 0 : it->second;
}

Distribution Counts::to_distribution(int n_bits) const {
    std::vector<double> p(std::size_t{1} << n_bits, 0.0);
    for (const auto& [idx, c] : histogram) {
        p.at(idx) = static_cast<double>(c) / static_cast<double>(shots);
    }
    return Distribution(n_bits, std::move(p));
}

namespace {

Counts sample_from_probs(const std::vector<double>& probs, std::uint64_t shots,
                         std::uint64_t rng_seed) {
    if (shots == 0) {
        throw std::invalid_argument("sample: shots must be >= 1");
    }
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    cdf.back() = std::max(cdf.back(), 1.0); // guard the top bin against rounding

    std::mt19937_64 rng(rng_seed);
    Counts counts;
    counts.shots = shots;
    for (std::uint64_t s = 0; s < shots; ++s) {
        // 53-bit uniform in [0,1)
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto idx = static_cast<std::uint32_t>(std::distance(cdf.begin(), it));
        ++counts.histogram[idx];
    }
    return counts;
}

} // namespace

Counts sample(const StateVector& state, std::uint64_t shots, std::uint64_t rng_seed) {
    return sample_from_probs(state.probabilities(), shots, rng_seed);
}

Counts sample(const Distribution& dist, std::uint64_t shots, std::uint64_t rng_seed) {
    return sample_from_probs(dist.probs, shots, rng_seed);
}

Distribution apply_depolarizing(const Distribution& dist, double per_gate_error,
                                int gate_count) {
    if (per_gate_error < 0.0 || per_gate_error > 1.0) {
        throw std::invalid_argument("apply_depolarizing: per_gate_error must be in [0,1]");
    }
    if (gate_count < 0) {
        throw std::invalid_argument("apply_depolarizing: gate_count must be >= 0");
    }
    const double lambda = 1.0 - std::pow(1.0 - per_gate_error, gate_count);
    const double u = 1.0 / static_cast<double>(dist.size());
    Distribution out = dist;
    for (double& p : out.probs) p = (1.0 - lambda) * p + lambda * u;
    return out;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
    // splitmix64 finalizer over the counter stream
    std::uint64_t z = base_seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::string bitstring_label(std::uint32_t basis_index, int n_bits) {
    std::string s(n_bits, '0');
    for (int b = 0; b < n_bits; ++b) {
        if (basis_index & (std::uint32_t{1} << (n_bits - 1 - b))) s[b] = '1';
    }
    return s;
}

} // namespace qcbm
