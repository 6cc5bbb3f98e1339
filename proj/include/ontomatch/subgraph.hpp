#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "ontomatch/weights.hpp"

namespace ontomatch {

struct NonDownhillPathError : std::runtime_error {
    NonDownhillPathError() : std::runtime_error("path does not follow decreasing voltage") {}
};

// A downhill path from the source, with the current surviving to its end.
struct PrefixPath {
    std::vector<std::uint32_t> vertices;  // slot sequence, starts at source
    std::vector<std::uint32_t> edges;     // edge indices, one per hop
    double delivered = 0.0;
};

// Current delivered along a vertex path: the 1-vertex path carries the whole
// source output; each hop keeps the fraction I(u,v)/I_out(u). Hops must
// strictly descend in voltage.
double delivered_current(std::span<const std::uint32_t> path, const CircuitProblem& problem,
                         const CircuitSolution& sol);

// Captured flow of an edge subset: sum of delivered currents over the maximal
// downhill paths from `source` inside the subset (traversal may additionally
// use the edges in `free_edges`, e.g. a property's auxiliary edges, which
// carry current but are not subgraph triples).
double captured_flow(const CircuitProblem& problem, const CircuitSolution& sol,
                     std::uint32_t source, std::span<const std::uint32_t> edge_subset,
                     std::span<const std::uint32_t> free_edges = {});

struct ExtractedSubgraph {
    std::vector<std::uint32_t> edges;      // picked edge indices, in pick order
    double captured_flow = 0.0;
    std::vector<PrefixPath> prefix_paths;  // maximal paths of the final subgraph
};

// Greedy assembly: repeatedly add the downhill path with the best delivered
// current per new vertex until k triple edges are picked or no path adds one.
ExtractedSubgraph extract_edges(const CircuitProblem& problem, const CircuitSolution& sol,
                                std::uint32_t source, std::size_t k);

struct SemanticSubgraph {
    ResourceId element = kNoResource;
    std::vector<std::size_t> triples;  // hybrid triple indices
    double captured_flow = 0.0;
    std::vector<PrefixPath> prefix_paths;
};

// Solves the circuit for the element and extracts its top-k subgraph. For
// properties an auxiliary edge to each domain concept is added first, with
// the property's own weight as conductance.
SemanticSubgraph extract_subgraph(const ConductanceGraph& cg, ResourceId element, std::size_t k);

struct ExtractionBatch {
    std::map<ResourceId, SemanticSubgraph> subgraphs;
    std::vector<std::pair<ResourceId, std::string>> failures;
};

// Per-element extraction for every concept and property; failures are
// collected, not thrown.
ExtractionBatch extract_all(const ConductanceGraph& cg, std::size_t k, unsigned threads = 0);

}  // namespace ontomatch
