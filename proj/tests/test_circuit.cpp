#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "ontomatch/ntriples.hpp"
#include "ontomatch/subgraph.hpp"
#include "ontomatch/weights.hpp"
#include "support/circuits.hpp"

using namespace ontomatch;

namespace {

HybridOntologyGraph hybrid_of(const std::string& text) {
    std::istringstream in(text);
    return process_ontology(parse_ntriples(in));
}

}  // namespace

// --------------------------------------------------------------------------
// attenuation
// --------------------------------------------------------------------------

TEST_CASE("attenuation pins") {
    for (double m : {1.0, 2.0, 10.0, 1000.0}) {
        CHECK(attenuation(1.0, m, 0.01) == doctest::Approx(1.0));
    }
    CHECK(attenuation(2.0, 4.0, 0.01) == doctest::Approx(0.5005).epsilon(3e-4));
    // g(m, m) -> 1/(2m) as epsilon -> 0
    CHECK(attenuation(1000.0, 1000.0, 1e-9) == doctest::Approx(1.0 / 2000.0).epsilon(1e-6));
    CHECK_THROWS_AS(attenuation(0.5, 4.0, 0.01), DomainError);
    CHECK_THROWS_AS(attenuation(5.0, 4.0, 0.01), DomainError);
}

TEST_CASE("attenuation is decreasing in x") {
    double prev = 2.0;
    for (double x = 1.0; x <= 20.0; x += 1.0) {
        const double g = attenuation(x, 20.0, 0.01);
        CHECK(g < prev);
        CHECK(g > 0.0);
        CHECK(g <= 1.0);
        prev = g;
    }
}

// --------------------------------------------------------------------------
// element weights
// --------------------------------------------------------------------------

TEST_CASE("frequency weight of a unique appearance is 1") {
    auto h = hybrid_of("<a> <p> <b> .\n");
    auto cg = build_conductance_graph(h, WeightParams{});
    CHECK(cg.weights.at(h.find_iri("a")).mu_f == doctest::Approx(1.0));
    CHECK(cg.weights.at(h.find_iri("p")).mu_f == doctest::Approx(1.0));
}

TEST_CASE("deepest concept has hierarchy weight 1") {
    auto h = hybrid_of(
        "<A> <rdfs:subClassOf> <B> .\n"
        "<B> <rdfs:subClassOf> <C> .\n");
    auto cg = build_conductance_graph(h, WeightParams{});
    CHECK(cg.weights.at(h.find_iri("A")).mu_h == doctest::Approx(1.0));
    CHECK(cg.weights.at(h.find_iri("C")).mu_h == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("instance-space weight follows the attenuation pin") {
    // concept X with 2 instances, concept Y with 8 (the maximum)
    std::ostringstream src;
    for (int i = 0; i < 2; ++i) src << "<x" << i << "> <rdf:type> <X> .\n";
    for (int i = 0; i < 8; ++i) src << "<y" << i << "> <rdf:type> <Y> .\n";
    auto h = hybrid_of(src.str());
    auto cg = build_conductance_graph(h, WeightParams{});
    CHECK(cg.weights.at(h.find_iri("X")).mu_isp == doctest::Approx(0.5834).epsilon(2e-4));
}

TEST_CASE("triple conductance arithmetic and bounds") {
    CHECK(triple_conductance(1.0, 1, 1.0, 1.0, 1) == doctest::Approx(1.0));
    CHECK(triple_conductance(0.6, 2, 0.9, 0.3, 3) == doctest::Approx(0.4333).epsilon(1e-3));

    auto h = hybrid_of(
        "<A> <rdfs:subClassOf> <B> .\n"
        "<i> <rdf:type> <A> .\n"
        "<i> <rel> <j> .\n");
    auto cg = build_conductance_graph(h, WeightParams{});
    for (const double w : cg.triple_conductance) {
        CHECK(w > 0.0);
        CHECK(w <= 1.0);
    }
}

TEST_CASE("gamma validation") {
    WeightParams p;
    p.gamma_concept = {0.5, 0.5, 0.5};
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = WeightParams{};
    p.lambda = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = WeightParams{};
    p.lambda = 1.0;
    CHECK_NOTHROW(p.validate());
}

// --------------------------------------------------------------------------
// circuit solve
// --------------------------------------------------------------------------

TEST_CASE("two-vertex chain solves by hand") {
    CircuitProblem p;
    p.vertex_count = 2;
    p.lambda = 1.0;
    p.edges.push_back({0, 1, 1.0, 0});
    auto sol = solve_circuit(p, 0);
    // sink edge C(a,z) = lambda * C(a,s) = 1: series divider
    CHECK(sol.voltage[0] == doctest::Approx(1.0));
    CHECK(sol.voltage[1] == doctest::Approx(0.5));
    CHECK(sol.edge_current[0] == doctest::Approx(0.5));
    CHECK(sol.out_current[0] == doctest::Approx(0.5));
    CHECK(sol.sink_current[1] == doctest::Approx(0.5));
}

TEST_CASE("isolated source raises") {
    CircuitProblem p;
    p.vertex_count = 3;
    p.edges.push_back({1, 2, 1.0, 0});
    CHECK_THROWS_AS(solve_circuit(p, 0), DisconnectedSourceError);
}

TEST_CASE("random circuits: Kirchhoff, Ohm, voltage bounds") {
    std::mt19937 rng(101);
    for (int round = 0; round < 50; ++round) {
        auto p = oracle::random_problem(rng, 40);
        auto sol = solve_circuit(p, 0);

        for (std::uint32_t u = 0; u < p.vertex_count; ++u) {
            CHECK(sol.voltage[u] >= 0.0);
            CHECK(sol.voltage[u] <= 1.0);
        }
        // Ohm holds exactly as computed from the solved voltages
        for (std::size_t e = 0; e < p.edges.size(); ++e) {
            const auto& ed = p.edges[e];
            const double expect =
                ed.u == ed.v ? 0.0 : ed.conductance * (sol.voltage[ed.u] - sol.voltage[ed.v]);
            CHECK(sol.edge_current[e] == expect);
        }
        // Kirchhoff at every internal vertex
        for (std::uint32_t u = 0; u < p.vertex_count; ++u) {
            if (u == 0) continue;
            double net = -sol.sink_current[u];
            for (std::size_t e = 0; e < p.edges.size(); ++e) {
                if (p.edges[e].u == u) net -= sol.edge_current[e];
                if (p.edges[e].v == u) net += sol.edge_current[e];
            }
            CHECK(std::abs(net) < 1e-9);
        }
    }
}

// --------------------------------------------------------------------------
// delivered current
// --------------------------------------------------------------------------

TEST_CASE("delivered current: single edge carries the whole source output") {
    CircuitProblem p;
    p.vertex_count = 2;
    p.lambda = 0.85;
    p.edges.push_back({0, 1, 0.7, 0});
    auto sol = solve_circuit(p, 0);
    const std::vector<std::uint32_t> path{0, 1};
    CHECK(delivered_current(path, p, sol) == doctest::Approx(sol.out_current[0]));
}

TEST_CASE("delivered current: one-step split follows Eq. 3 arithmetic") {
    // handcrafted solution: source output 1.0 split 0.6 / 0.4
    CircuitProblem p;
    p.vertex_count = 3;
    p.edges.push_back({0, 1, 1.0, 0});
    p.edges.push_back({0, 2, 1.0, 1});
    CircuitSolution sol;
    sol.source = 0;
    sol.voltage = {1.0, 0.4, 0.6};
    sol.edge_current = {0.6, 0.4};
    sol.sink_current = {0.0, 0.6, 0.4};
    sol.out_current = {1.0, 0.6, 0.4};
    const std::vector<std::uint32_t> path{0, 1};
    CHECK(delivered_current(path, p, sol) == doctest::Approx(0.6));
}

TEST_CASE("extending a path never increases delivered current") {
    std::mt19937 rng(55);
    for (int round = 0; round < 20; ++round) {
        auto p = oracle::random_problem(rng, 12);
        auto sol = solve_circuit(p, 0);
        // follow the strongest downhill edge twice if possible
        std::vector<std::uint32_t> path{0};
        for (int hop = 0; hop < 2; ++hop) {
            const std::uint32_t at = path.back();
            double best = 0.0;
            std::uint32_t next = at;
            for (std::size_t e = 0; e < p.edges.size(); ++e) {
                const auto& ed = p.edges[e];
                if (ed.u == at && sol.edge_current[e] > best) {
                    best = sol.edge_current[e];
                    next = ed.v;
                } else if (ed.v == at && -sol.edge_current[e] > best) {
                    best = -sol.edge_current[e];
                    next = ed.u;
                }
            }
            if (next == at) break;
            path.push_back(next);
            if (path.size() >= 2) {
                std::vector<std::uint32_t> prefix(path.begin(), path.end() - 1);
                CHECK(delivered_current(path, p, sol) <=
                      delivered_current(prefix, p, sol) + 1e-12);
            }
        }
    }
}

TEST_CASE("uphill paths are rejected") {
    CircuitProblem p;
    p.vertex_count = 2;
    p.lambda = 1.0;
    p.edges.push_back({0, 1, 1.0, 0});
    auto sol = solve_circuit(p, 0);
    const std::vector<std::uint32_t> uphill{1, 0};
    CHECK_THROWS_AS(delivered_current(uphill, p, sol), NonDownhillPathError);
}
