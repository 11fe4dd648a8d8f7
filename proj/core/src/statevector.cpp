#include "qcbm/statevector.hpp"

#include <cmath>
#include <string>

#include "qcbm/errors.hpp"

namespace qcbm {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("StateVector: n_qubits must be >= 1");
    }
    amps_.assign(std::size_t{1} << n_qubits, cdouble{0.0, 0.0});
    amps_[0] = 1.0;
}

void StateVector::set_amplitudes(std::vector<cdouble> amps) {
    if (amps.size() != amps_.size()) {
        throw std::invalid_argument("StateVector: amplitude count must be 2^n_qubits");
    }
    amps_ = std::move(amps);
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
}

namespace {

void check_qubit(int q, int n, const char* what) {
    if (q < 0 || q >= n) {
        throw InvalidGateError(std::string(what) + ": qubit index " + std::to_string(q) +
                               " out of range for " + std::to_string(n) + " qubits");
    }
}

} // namespace

void StateVector::apply(const GateOp& gate) {
    const int n = n_qubits_;
    const std::size_t dim = amps_.size();

    switch (gate.kind) {
    case GateKind::RZ: {
        check_qubit(gate.q0, n, "Rz");
        const std::size_t bit = std::size_t{1} << (n - 1 - gate.q0);
        const cdouble e0 = std::polar(1.0, -gate.angle / 2.0);
        const cdouble e1 = std::polar(1.0, +gate.angle / 2.0);
        for (std::size_t i = 0; i < dim; ++i) {
            amps_[i] *= (i & bit) ? e1 : e0;
        }
        break;
    }
    case GateKind::RX: {
        check_qubit(gate.q0, n, "Rx");
        const std::size_t bit = std::size_t{1} << (n - 1 - gate.q0);
        const double c = std::cos(gate.angle / 2.0);
        const cdouble mis{0.0, -std::sin(gate.angle / 2.0)};
        for (std::size_t i0 = 0; i0 < dim; ++i0) {
            if (i0 & bit) continue;
            const std::size_t i1 = i0 | bit;
            const cdouble a0 = amps_[i0];
            const cdouble a1 = amps_[i1];
            amps_[i0] = c * a0 + mis * a1;
            amps_[i1] = mis * a0 + c * a1;
        }
        break;
    }
    case GateKind::XX: {
        check_qubit(gate.q0, n, "XX");
        check_qubit(gate.q1, n, "XX");
        if (gate.q0 == gate.q1) {
            throw InvalidGateError("XX: pair indices must be distinct");
        }
        const std::size_t mask = (std::size_t{1} << (n - 1 - gate.q0)) |
                                 (std::size_t{1} << (n - 1 - gate.q1));
        const double c = std::cos(gate.angle / 2.0);
        const cdouble mis{0.0, -std::sin(gate.angle / 2.0)};
        for (std::size_t i = 0; i < dim; ++i) {
            const std::size_t j = i ^ mask;
            if (j < i) continue;
            const cdouble ai = amps_[i];
            const cdouble aj = amps_[j];
            amps_[i] = c * ai + mis * aj;
            amps_[j] = mis * ai + c * aj;
        }
        break;
    }
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
    return p;
}

StateVector run_circuit(int n_qubits, std::span<const GateOp> gates) {
    StateVector state(n_qubits);
    for (const auto& g : gates) state.apply(g);
    return state;
}

} // namespace qcbm
