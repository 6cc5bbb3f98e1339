#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ontomatch/circuit.hpp"
#include "ontomatch/graph.hpp"

namespace ontomatch {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Attenuation g(x, m) = 1/2 (1/x + 1 - log x / log(m + eps)); decreasing in x,
// g(1, m) = 1 for any m.
double attenuation(double x, double m, double epsilon);

struct WeightParams {
    std::array<double, 3> gamma_concept{1.0 / 3, 1.0 / 3, 1.0 / 3};
    std::array<double, 3> gamma_property{1.0 / 3, 1.0 / 3, 1.0 / 3};
    std::array<double, 2> gamma_instance{0.5, 0.5};
    double epsilon = 0.01;
    double lambda = 0.85;  // current loss coefficient, (0, 1]

    void validate() const;
};

// Per-element weight breakdown; inactive contributions are renormalized away.
struct ElementWeightRow {
    double mu_f = 0.0, mu_h = 0.0, mu_isp = 0.0, mu_id = 0.0, mu_io = 0.0;
    bool has_f = false, has_h = false, has_isp = false, has_id = false, has_io = false;
    double mu = 0.0;
};

// Conductances for every hybrid-graph triple plus the per-vertex weights they
// came from. Immutable once built; slots index the embedded CircuitProblem.
class ConductanceGraph {
public:
    const HybridOntologyGraph* base = nullptr;
    std::unordered_map<ResourceId, ElementWeightRow> weights;   // mu per vertex/element
    std::vector<double> triple_conductance;                     // per hybrid triple
    std::unordered_map<ResourceId, double> sink_conductance;    // lambda * sum C(u,.)

    CircuitProblem problem;                                      // edges mirror triples
    std::unordered_map<ResourceId, std::uint32_t> slot_of;
    std::vector<ResourceId> slot_to_resource;

    double mu(ResourceId r) const {
        auto it = weights.find(r);
        return it == weights.end() ? 0.0 : it->second.mu;
    }
    std::uint32_t slot(ResourceId r) const { return slot_of.at(r); }
};

// Applies the five weighting rules and Eq.-15 conductance to the whole graph.
ConductanceGraph build_conductance_graph(const HybridOntologyGraph& g, const WeightParams& params);

// w(t) = (mu(s)/degree(s) + mu(p) + mu(o)/degree(o)) / 3.
double triple_conductance(double mu_s, std::uint32_t degree_s, double mu_p, double mu_o,
                          std::uint32_t degree_o);

}  // namespace ontomatch
