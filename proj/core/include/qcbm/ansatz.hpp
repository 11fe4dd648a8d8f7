#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qcbm/distribution.hpp"
#include "qcbm/statevector.hpp"

namespace qcbm {

/// Unordered qubit pairs allowed to share an XX gate within one entangling
/// layer. Edges are stored with lo < hi, sorted lexicographically, which
/// fixes the parameter order of entangling layers.
struct ConnectivityGraph {
    int n_qubits = 0;
    std::vector<std::pair<int, int>> edges;

    static ConnectivityGraph all_to_all(int n_qubits);
    static ConnectivityGraph star(int n_qubits, int center = 0);
};

/// Layered circuit structure: layers alternate rotation / entangling,
/// starting with a rotation layer; n_layers is even. A rotation layer applies
/// Rz(gamma) Rx(beta) Rz(alpha) on each qubit, in that temporal order; when
/// drop_first_z is set the gamma rotation of the first layer is omitted
/// (it only phases |0>). An entangling layer applies one XX per graph edge.
///
/// Flat parameter layout is layer-major; within a rotation layer qubit-major
/// with (gamma, beta, alpha) per qubit (first-applied first); within an
/// entangling layer one angle per edge in lexicographic edge order.
struct AnsatzSpec {
    ConnectivityGraph graph;
    int n_layers = 2;
    bool drop_first_z = true;
    std::vector<int> pixel_map; // qubit i -> pixel index, a bijection

    int n_qubits() const { return graph.n_qubits; }
    int parameter_count() const;
};

/// Validates and assembles an AnsatzSpec. An empty pixel_map means the
/// identity map (qubit i <-> pixel i, row-major image order).
AnsatzSpec build_ansatz(ConnectivityGraph graph, int n_layers, bool drop_first_z = true,
                        std::vector<int> pixel_map = {});

/// Maps a flat angle vector (length spec.parameter_count(), reduced to
/// principal values before use) to the concrete gate sequence.
std::vector<GateOp> instantiate(const AnsatzSpec& spec, const std::vector<double>& params);

/// Basis index re-ordered from qubit-bit order to pixel-bit order.
std::uint32_t qubit_to_pixel_index(const AnsatzSpec& spec, std::uint32_t qubit_index);

/// Distribution over measured qubit strings re-expressed over pixel strings.
Distribution remap_to_pixels(const AnsatzSpec& spec, const Distribution& qubit_dist);
Counts remap_to_pixels(const AnsatzSpec& spec, const Counts& qubit_counts);

} // namespace qcbm
