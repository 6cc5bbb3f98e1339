#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ontomatch {

// Undirected resistor between two vertex slots. `triple` indexes the hybrid
// triple the edge stands for; -1 marks auxiliary edges (property extraction)
// that never enter a subgraph.
struct CircuitEdge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    double conductance = 0.0;
    std::int32_t triple = -1;
};

struct CircuitProblem {
    std::uint32_t vertex_count = 0;
    std::vector<CircuitEdge> edges;
    double lambda = 0.85;
};

struct DisconnectedSourceError : std::runtime_error {
    DisconnectedSourceError() : std::runtime_error("source vertex has no incident edges") {}
};

struct SolverDivergenceError : std::runtime_error {
    explicit SolverDivergenceError(double r) :
        std::runtime_error("circuit solve missed tolerance, residual " + std::to_string(r)),
        residual(r) {}
    double residual;
};

// Voltages and currents of one solved source. The sink node is implicit:
// every vertex except the source is grounded through lambda times its total
// incident conductance, V(source) = 1, V(sink) = 0.
struct CircuitSolution {
    std::uint32_t source = 0;
    std::vector<double> voltage;           // per slot, in [0, 1]
    std::vector<double> edge_current;      // signed, C * (V(u) - V(v))
    std::vector<double> sink_current;      // per slot, V(u) * C(u, z)
    std::vector<double> out_current;       // total current leaving each vertex

    double current(std::uint32_t edge_index) const { return edge_current[edge_index]; }
};

CircuitSolution solve_circuit(const CircuitProblem& problem, std::uint32_t source);

}  // namespace ontomatch
