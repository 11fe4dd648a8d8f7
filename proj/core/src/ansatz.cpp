#include "qcbm/ansatz.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qcbm/angles.hpp"

namespace qcbm {

ConnectivityGraph ConnectivityGraph::all_to_all(int n_qubits) {
    ConnectivityGraph g;
    g.n_qubits = n_qubits;
    for (int a = 0; a < n_qubits; ++a) {
        for (int b = a + 1; b < n_qubits; ++b) g.edges.emplace_back(a, b);
    }
    return g;
}

ConnectivityGraph ConnectivityGraph::star(int n_qubits, int center) {
    if (center < 0 || center >= n_qubits) {
        throw std::invalid_argument("star: center out of range");
    }
    ConnectivityGraph g;
    g.n_qubits = n_qubits;
    for (int q = 0; q < n_qubits; ++q) {
        if (q == center) continue;
        g.edges.emplace_back(std::min(q, center), std::max(q, center));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

int AnsatzSpec::parameter_count() const {
    const int n_rot_layers = n_layers / 2;
    const int n_ent_layers = n_layers / 2;
    int count = n_rot_layers * 3 * n_qubits() +
                n_ent_layers * static_cast<int>(graph.edges.size());
    if (drop_first_z) count -= n_qubits();
    return count;
}

AnsatzSpec build_ansatz(ConnectivityGraph graph, int n_layers, bool drop_first_z,
                        std::vector<int> pixel_map) {
    if (graph.n_qubits < 1) {
        throw std::invalid_argument("build_ansatz: graph must have >= 1 qubit");
    }
    if (n_layers < 2 || n_layers % 2 != 0) {
        throw std::invalid_argument("build_ansatz: n_layers must be even and >= 2, got " +
                                    std::to_string(n_layers));
    }
    for (auto& [a, b] : graph.edges) {
        if (a == b) throw std::invalid_argument("build_ansatz: self-loop edge");
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= graph.n_qubits) {
            throw std::invalid_argument("build_ansatz: edge endpoint out of range");
        }
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());

    if (pixel_map.empty()) {
        pixel_map.resize(graph.n_qubits);
        for (int q = 0; q < graph.n_qubits; ++q) pixel_map[q] = q;
    }
    if (static_cast<int>(pixel_map.size()) != graph.n_qubits) {
        throw std::invalid_argument("build_ansatz: pixel_map size must equal n_qubits");
    }
    std::vector<bool> seen(pixel_map.size(), false);
    for (int p : pixel_map) {
        if (p < 0 || p >= graph.n_qubits || seen[p]) {
            throw std::invalid_argument("build_ansatz: pixel_map must be a bijection");
        }
        seen[p] = true;
    }

    AnsatzSpec spec;
    spec.graph = std::move(graph);
    spec.n_layers = n_layers;
    spec.drop_first_z = drop_first_z;
    spec.pixel_map = std::move(pixel_map);
    return spec;
}

std::vector<GateOp> instantiate(const AnsatzSpec& spec, const std::vector<double>& params) {
    if (static_cast<int>(params.size()) != spec.parameter_count()) {
        throw std::invalid_argument("instantiate: expected " +
                                    std::to_string(spec.parameter_count()) +
                                    " parameters, got " + std::to_string(params.size()));
    }
    std::vector<GateOp> gates;
    const int n = spec.n_qubits();
    std::size_t k = 0;
    auto next = [&] { return principal_angle(params[k++]); };

    for (int layer = 0; layer < spec.n_layers; ++layer) {
        if (layer % 2 == 0) {
            const bool drop_z = spec.drop_first_z && layer == 0;
            for (int q = 0; q < n; ++q) {
                if (!drop_z) gates.push_back(GateOp::rz(q, next())); // gamma
                gates.push_back(GateOp::rx(q, next()));              // beta
                gates.push_back(GateOp::rz(q, next()));              // alpha
            }
        } else {
            for (const auto& [a, b] : spec.graph.edges) {
                gates.push_back(GateOp::xx(a, b, next())); // chi
            }
        }
    }
    return gates;
}

std::uint32_t qubit_to_pixel_index(const AnsatzSpec& spec, std::uint32_t qubit_index) {
    const int n = spec.n_qubits();
    std::uint32_t out = 0;
    for (int q = 0; q < n; ++q) {
        if (qubit_index & (std::uint32_t{1} << (n - 1 - q))) {
            out |= std::uint32_t{1} << (n - 1 - spec.pixel_map[q]);
        }
    }
    return out;
}

Distribution remap_to_pixels(const AnsatzSpec& spec, const Distribution& qubit_dist) {
    std::vector<double> p(qubit_dist.size(), 0.0);
    for (std::size_t i = 0; i < qubit_dist.size(); ++i) {
        p[qubit_to_pixel_index(spec, static_cast<std::uint32_t>(i))] = qubit_dist.probs[i];
    }
    return Distribution(qubit_dist.n_bits, std::move(p));
}

Counts remap_to_pixels(const AnsatzSpec& spec, const Counts& qubit_counts) {
    Counts out;
    out.shots = qubit_counts.shots;
    for (const auto& [idx, c] : qubit_counts.histogram) {
        out.histogram[qubit_to_pixel_index(spec, idx)] += c;
    }
    return out;
}

} // namespace qcbm
