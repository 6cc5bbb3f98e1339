#include "ontomatch/circuit.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <Eigen/IterativeLinearSolvers>

#include <algorithm>
#include <cmath>

namespace ontomatch {

CircuitSolution solve_circuit(const CircuitProblem& problem, std::uint32_t source) {
    const std::uint32_t n = problem.vertex_count;

    // Total incident conductance per vertex (self-loops carry no current and
    // are ignored throughout).
    std::vector<double> incident(n, 0.0);
    bool source_touched = false;
    for (const auto& e : problem.edges) {
        if (e.u == e.v) continue;
        incident[e.u] += e.conductance;
        incident[e.v] += e.conductance;
        if (e.u == source || e.v == source) source_touched = true;
    }
    if (!source_touched) throw DisconnectedSourceError{};

    // Sink edges ground every non-source vertex: C(u,z) = lambda * incident.
    std::vector<double> sink(n, 0.0);
    for (std::uint32_t u = 0; u < n; ++u) {
        if (u != source && incident[u] > 0.0) sink[u] = problem.lambda * incident[u];
    }

    // Internal unknowns: edged vertices other than the source. Isolated
    // vertices sit at ground potential.
    std::vector<std::int32_t> row_of(n, -1);
    std::vector<std::uint32_t> vertex_of;
    for (std::uint32_t u = 0; u < n; ++u) {
        if (u == source || incident[u] == 0.0) continue;
        row_of[u] = static_cast<std::int32_t>(vertex_of.size());
        vertex_of.push_back(u);
    }

    const auto m = static_cast<Eigen::Index>(vertex_of.size());
    Eigen::VectorXd x = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
    Eigen::SparseMatrix<double> A(m, m);

    if (m > 0) {
        std::vector<Eigen::Triplet<double>> coeffs;
        coeffs.reserve(problem.edges.size() * 4 + vertex_of.size());
        for (Eigen::Index i = 0; i < m; ++i) {
            coeffs.emplace_back(i, i, sink[vertex_of[i]]);
        }
        for (const auto& e : problem.edges) {
            if (e.u == e.v) continue;
            const std::int32_t ru = row_of[e.u];
            const std::int32_t rv = row_of[e.v];
            if (ru >= 0) coeffs.emplace_back(ru, ru, e.conductance);
            if (rv >= 0) coeffs.emplace_back(rv, rv, e.conductance);
            if (ru >= 0 && rv >= 0) {
                coeffs.emplace_back(ru, rv, -e.conductance);
                coeffs.emplace_back(rv, ru, -e.conductance);
            }
            if (ru >= 0 && e.v == source) b[ru] += e.conductance;  // V(source) = 1
            if (rv >= 0 && e.u == source) b[rv] += e.conductance;
        }
        A.setFromTriplets(coeffs.begin(), coeffs.end());
        A.makeCompressed();

        Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(A);
        bool solved = false;
        if (llt.info() == Eigen::Success) {
            x = llt.solve(b);
            solved = llt.info() == Eigen::Success;
        }
        if (!solved) {
            Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
            cg.setTolerance(1e-9);
            cg.setMaxIterations(10 * static_cast<Eigen::Index>(n));
            cg.compute(A);
            x = cg.solve(b);
        }
        const double bnorm = std::max(b.norm(), 1e-300);
        const double residual = (A * x - b).norm() / bnorm;
        if (!(residual <= 1e-9)) throw SolverDivergenceError(residual);
    }

    CircuitSolution sol;
    sol.source = source;
    sol.voltage.assign(n, 0.0);
    sol.voltage[source] = 1.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        sol.voltage[vertex_of[i]] = std::clamp(x[i], 0.0, 1.0);
    }

    sol.edge_current.resize(problem.edges.size());
    for (std::size_t i = 0; i < problem.edges.size(); ++i) {
        const auto& e = problem.edges[i];
        sol.edge_current[i] =
            e.u == e.v ? 0.0 : e.conductance * (sol.voltage[e.u] - sol.voltage[e.v]);
    }

    sol.sink_current.assign(n, 0.0);
    sol.out_current.assign(n, 0.0);
    for (std::uint32_t u = 0; u < n; ++u) {
        sol.sink_current[u] = sink[u] * sol.voltage[u];
        sol.out_current[u] = sol.sink_current[u];
    }
    for (std::size_t i = 0; i < problem.edges.size(); ++i) {
        const double c = sol.edge_current[i];
        if (c > 0.0) {
            sol.out_current[problem.edges[i].u] += c;
        } else if (c < 0.0) {
            sol.out_current[problem.edges[i].v] -= c;
        }
    }
    return sol;
}

}  // namespace ontomatch
