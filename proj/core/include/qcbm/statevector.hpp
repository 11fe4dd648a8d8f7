#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qcbm {

using cdouble = std::complex<double>;

/// Gate conventions (fixed once, used everywhere):
///   Rz(a) = exp(-i a Z / 2)
///   Rx(b) = exp(-i b X / 2)
///   XX(x) = exp(-i (x/2) X (x) X)
/// All angles are radians; callers normally keep them in [0, 2pi).
enum class GateKind { RZ, RX, XX };

struct GateOp {
    GateKind kind;
    int q0 = 0;       // target (RZ, RX) or first qubit of the pair (XX)
    int q1 = -1;      // second qubit of the pair (XX only)
    double angle = 0.0;

    static GateOp rz(int q, double angle) { return {GateKind::RZ, q, -1, angle}; }
    static GateOp rx(int q, double angle) { return {GateKind::RX, q, -1, angle}; }
    static GateOp xx(int qa, int qb, double angle) { return {GateKind::XX, qa, qb, angle}; }
};

/// Dense n-qubit pure state: 2^n complex amplitudes.
///
/// Bit ordering: qubit 0 is the MOST significant bit of the basis index, so
/// for n=4 the basis state |q0 q1 q2 q3> has index q0*8 + q1*4 + q2*2 + q3.
class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return amps_.size(); }

    const std::vector<cdouble>& amplitudes() const { return amps_; }
    cdouble amplitude(std::size_t basis_index) const { return amps_[basis_index]; }
    void set_amplitudes(std::vector<cdouble> amps);

    /// Squared-magnitude sum; 1 within 1e-10 after any gate application.
    double norm_squared() const;

    /// Applies one gate in place. Throws InvalidGateError on bad targets.
    void apply(const GateOp& gate);

    /// |amplitude_b|^2 for every basis state b.
    std::vector<double> probabilities() const;

  private:
    int n_qubits_;
    std::vector<cdouble> amps_;
};

/// Applies `gates` in order to |0...0> on n_qubits.
StateVector run_circuit(int n_qubits, std::span<const GateOp> gates);

} // namespace qcbm
