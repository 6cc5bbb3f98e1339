#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "ontomatch/ntriples.hpp"

using namespace ontomatch;

namespace {

RawOntologyGraph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_ntriples(in);
}

std::vector<std::array<std::string, 3>> value_triples(const RawOntologyGraph& g) {
    std::vector<std::array<std::string, 3>> out;
    for (const auto& t : g.triples) {
        out.push_back({g.res(t.s).value, g.res(t.p).value, g.res(t.o).value});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<std::string, 3>> value_triples(const HybridOntologyGraph& g,
                                                      const std::vector<Triple>& ts) {
    std::vector<std::array<std::string, 3>> out;
    for (const auto& t : ts) {
        out.push_back({g.res(t.s).value, g.res(t.p).value, g.res(t.o).value});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool contains(const RawOntologyGraph& g, const std::string& s, const std::string& p,
              const std::string& o) {
    for (const auto& t : g.triples) {
        if (g.res(t.s).value == s && g.res(t.p).value == p && g.res(t.o).value == o) return true;
    }
    return false;
}

}  // namespace

// --------------------------------------------------------------------------
// Phase 1: containers and collections
// --------------------------------------------------------------------------

TEST_CASE("bag membership becomes one direct statement per member") {
    auto g = parse(
        "<Beatles> <artist> _:a11 .\n"
        "_:a11 <rdf:type> <rdf:Bag> .\n"
        "_:a11 <rdf:_1> <John> .\n"
        "_:a11 <rdf:_2> <Paul> .\n"
        "_:a11 <rdf:_3> <George> .\n"
        "_:a11 <rdf:_4> <Ringo> .\n");
    expand_containers(g);
    CHECK(g.triples.size() == 4);
    for (const auto* m : {"John", "Paul", "George", "Ringo"}) {
        CHECK(contains(g, "Beatles", "artist", m));
    }
}

TEST_CASE("container-free graph is untouched") {
    auto g = parse(
        "<A> <rdfs:subClassOf> <B> .\n"
        "<x> <rdf:type> <A> .\n");
    const auto before = value_triples(g);
    expand_containers(g);
    CHECK(value_triples(g) == before);
}

TEST_CASE("one-member Seq: one direct triple replaces three container triples") {
    auto g = parse(
        "<s> <member> _:c .\n"
        "_:c <rdf:type> <rdf:Seq> .\n"
        "_:c <rdf:_1> <only> .\n");
    expand_containers(g);
    CHECK(g.triples.size() == 1);
    CHECK(contains(g, "s", "member", "only"));
}

TEST_CASE("rdf:List chains expand in order") {
    auto g = parse(
        "<X> <owl:intersectionOf> _:l1 .\n"
        "_:l1 <rdf:first> <A> .\n"
        "_:l1 <rdf:rest> _:l2 .\n"
        "_:l2 <rdf:first> <B> .\n"
        "_:l2 <rdf:rest> <rdf:nil> .\n");
    expand_containers(g);
    CHECK(g.triples.size() == 2);
    CHECK(contains(g, "X", "owl:intersectionOf", "A"));
    CHECK(contains(g, "X", "owl:intersectionOf", "B"));
}

TEST_CASE("cyclic list is reported and left untouched") {
    auto g = parse(
        "<X> <p> _:l1 .\n"
        "_:l1 <rdf:first> <A> .\n"
        "_:l1 <rdf:rest> _:l2 .\n"
        "_:l2 <rdf:first> <B> .\n"
        "_:l2 <rdf:rest> _:l1 .\n");
    const auto before = value_triples(g);
    expand_containers(g);
    CHECK(value_triples(g) == before);
    REQUIRE_FALSE(g.warnings.empty());
    CHECK(g.warnings[0].find("cyclic") != std::string::npos);
}

// --------------------------------------------------------------------------
// Phase 2: enrichment
// --------------------------------------------------------------------------

TEST_CASE("sub-concepts inherit domain attachments") {
    auto g = parse(
        "<p> <rdfs:domain> <A> .\n"
        "<B> <rdfs:subClassOf> <A> .\n");
    enrich_graph(g);
    CHECK(contains(g, "p", "rdfs:domain", "B"));
}

TEST_CASE("symmetric properties add reversed triples") {
    auto g = parse(
        "<p> <rdf:type> <owl:SymmetricProperty> .\n"
        "<s> <p> <o> .\n");
    enrich_graph(g);
    CHECK(contains(g, "o", "p", "s"));
}

TEST_CASE("transitive properties close") {
    auto g = parse(
        "<p> <rdf:type> <owl:TransitiveProperty> .\n"
        "<a> <p> <b> .\n"
        "<b> <p> <c> .\n"
        "<c> <p> <d> .\n");
    enrich_graph(g);
    CHECK(contains(g, "a", "p", "c"));
    CHECK(contains(g, "a", "p", "d"));
    CHECK(contains(g, "b", "p", "d"));
}

TEST_CASE("sub-properties inherit domain and range") {
    auto g = parse(
        "<p> <rdfs:subPropertyOf> <q> .\n"
        "<q> <rdfs:domain> <D> .\n"
        "<q> <rdfs:range> <R> .\n");
    enrich_graph(g);
    CHECK(contains(g, "p", "rdfs:domain", "D"));
    CHECK(contains(g, "p", "rdfs:range", "R"));
}

TEST_CASE("intersection axiom members become superclasses") {
    auto g = parse(
        "<X> <owl:intersectionOf> <A> .\n"
        "<X> <owl:intersectionOf> <B> .\n"
        "<C> <rdfs:subClassOf> <X> .\n");
    enrich_graph(g);
    CHECK(contains(g, "X", "rdfs:subClassOf", "A"));
    CHECK(contains(g, "C", "rdfs:subClassOf", "A"));
    CHECK(contains(g, "C", "rdfs:subClassOf", "B"));
}

TEST_CASE("equivalent properties duplicate statements both ways") {
    auto g = parse(
        "<p> <owl:equivalentProperty> <q> .\n"
        "<s> <p> <o> .\n"
        "<s2> <q> <o2> .\n");
    enrich_graph(g);
    CHECK(contains(g, "s", "q", "o"));
    CHECK(contains(g, "s2", "p", "o2"));
}

TEST_CASE("sameAs resources share statements") {
    auto g = parse(
        "<a> <owl:sameAs> <b> .\n"
        "<a> <p> <x> .\n"
        "<y> <q> <b> .\n");
    enrich_graph(g);
    CHECK(contains(g, "b", "p", "x"));
    CHECK(contains(g, "y", "q", "a"));
}

TEST_CASE("axiom-free graph unchanged; enrichment monotone and idempotent") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> nd(1, 12);
    for (int round = 0; round < 10; ++round) {
        std::ostringstream src;
        const int n = 3 + nd(rng);
        for (int i = 0; i < n; ++i) {
            switch (nd(rng) % 4) {
                case 0: src << "<C" << nd(rng) << "> <rdfs:subClassOf> <C" << nd(rng) << "> .\n"; break;
                case 1: src << "<p" << nd(rng) << "> <rdfs:domain> <C" << nd(rng) << "> .\n"; break;
                case 2: src << "<i" << nd(rng) << "> <rdf:type> <C" << nd(rng) << "> .\n"; break;
                default: src << "<p" << nd(rng) << "> <rdf:type> <owl:SymmetricProperty> .\n"; break;
            }
        }
        auto g = parse(src.str());
        const auto before = value_triples(g);
        enrich_graph(g);
        const auto once = value_triples(g);
        // monotone: every original triple survives
        CHECK(std::includes(once.begin(), once.end(), before.begin(), before.end()));
        enrich_graph(g);
        CHECK(value_triples(g) == once);  // idempotent
    }
}

// --------------------------------------------------------------------------
// Phase 3: refinement
// --------------------------------------------------------------------------

TEST_CASE("metamodel typing removed, instance typing kept") {
    auto g = parse(
        "<Game> <rdf:type> <owl:Class> .\n"
        "<StarWars> <rdf:type> <Game> .\n");
    refine_graph(g);
    CHECK(g.triples.size() == 1);
    CHECK(contains(g, "StarWars", "rdf:type", "Game"));
}

TEST_CASE("annotations, header, version info and Thing statements removed") {
    auto g = parse(
        "<onto> <rdf:type> <owl:Ontology> .\n"
        "<onto> <owl:versionInfo> \"v1\" .\n"
        "<onto> <rdfs:comment> \"about\" .\n"
        "<A> <rdfs:label> \"a label\" .\n"
        "<A> <rdfs:seeAlso> \"elsewhere\" .\n"
        "<A> <rdfs:subClassOf> <owl:Thing> .\n"
        "<A> <rdfs:subClassOf> <B> .\n");
    refine_graph(g);
    CHECK(g.triples.size() == 1);
    CHECK(contains(g, "A", "rdfs:subClassOf", "B"));
}

TEST_CASE("annotation-free graph unchanged by refinement") {
    auto g = parse(
        "<A> <rdfs:subClassOf> <B> .\n"
        "<x> <rel> <y> .\n");
    const auto before = value_triples(g);
    refine_graph(g);
    CHECK(value_triples(g) == before);
}

TEST_CASE("refinement never removes all-non-primitive triples") {
    auto g = parse(
        "<note> <rdf:type> <owl:AnnotationProperty> .\n"
        "<a> <note> <b> .\n"          // annotation property linking resources
        "<a> <note> \"text\" .\n"     // annotation property with literal
        "<onto> <rdf:type> <owl:Ontology> .\n"
        "<onto> <custom> <thing> .\n"  // non-primitive statement about the header
        "<x> <rel> <y> .\n");
    refine_graph(g);
    CHECK(contains(g, "a", "note", "b"));
    CHECK(contains(g, "onto", "custom", "thing"));
    CHECK(contains(g, "x", "rel", "y"));
    CHECK_FALSE(contains(g, "a", "note", "text"));
}

// --------------------------------------------------------------------------
// Hybridization
// --------------------------------------------------------------------------

TEST_CASE("single edges unchanged, parallel edges become trios") {
    auto g = parse(
        "<a> <p> <b> .\n"
        "<a> <q> <b> .\n"
        "<a> <r> <b> .\n"
        "<c> <p> <d> .\n");
    auto h = build_hybrid_graph(std::move(g));
    // 1 direct + 2 trios (6 bipartite triples) + 1 untouched
    CHECK(h.triples.size() == 1 + 6 + 1);
    CHECK(h.reified_triples.size() == 2);

    std::size_t direct = 0;
    for (const auto& t : h.triples) {
        if (t.origin != TripleOrigin::BipartiteExpansion) ++direct;
    }
    CHECK(direct == 2);

    // deterministic choice: lexicographically smallest predicate stays direct
    bool found = false;
    for (const auto& t : h.triples) {
        if (t.origin == TripleOrigin::BipartiteExpansion) continue;
        if (h.res(t.s).value == "a") {
            CHECK(h.res(t.p).value == "p");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("hybridize then dehybridize reproduces the triple multiset") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> nd(1, 6), len(2, 25);
    for (int round = 0; round < 25; ++round) {
        std::ostringstream src;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) {
            src << "<v" << nd(rng) << "> <p" << nd(rng) << "> <v" << nd(rng) << "> .\n";
        }
        auto g = parse(src.str());
        const auto before = value_triples(g);
        auto h = build_hybrid_graph(std::move(g));
        CHECK(value_triples(h, h.dehybridize()) == before);
    }
}

TEST_CASE("element classification and degrees") {
    auto g = parse(
        "<Paper> <rdf:type> <owl:Class> .\n"
        "<Article> <rdfs:subClassOf> <Paper> .\n"
        "<writes> <rdfs:domain> <Person> .\n"
        "<writes> <rdfs:range> <Paper> .\n"
        "<alice> <rdf:type> <Person> .\n"
        "<alice> <writes> <p1> .\n");
    auto h = process_ontology(std::move(g));
    CHECK(h.kind_of(h.find_iri("Paper")) == ElementKind::Concept);
    CHECK(h.kind_of(h.find_iri("Article")) == ElementKind::Concept);
    CHECK(h.kind_of(h.find_iri("Person")) == ElementKind::Concept);
    CHECK(h.kind_of(h.find_iri("writes")) == ElementKind::Property);
    CHECK(h.kind_of(h.find_iri("alice")) == ElementKind::Instance);
    CHECK(h.kind_of(h.find_iri("p1")) == ElementKind::Instance);
    CHECK(h.concepts.size() == 3);
    CHECK(h.properties.size() == 1);
    CHECK(h.instances.size() == 2);

    const ResourceId alice = h.find_iri("alice");
    CHECK(h.degree_of(alice) == 2);  // typing + writes statement
}

TEST_CASE("full pipeline counts move in the documented directions") {
    // containers + axioms + annotations in one fixture
    auto g = parse(
        "<onto> <rdf:type> <owl:Ontology> .\n"
        "<onto> <owl:versionInfo> \"1\" .\n"
        "<A> <rdf:type> <owl:Class> .\n"
        "<A> <rdfs:label> \"thing a\" .\n"
        "<B> <rdfs:subClassOf> <A> .\n"
        "<p> <rdfs:domain> <A> .\n"
        "<p> <rdf:type> <owl:SymmetricProperty> .\n"
        "<x> <p> <y> .\n"
        "<set> <holds> _:bag .\n"
        "_:bag <rdf:type> <rdf:Bag> .\n"
        "_:bag <rdf:_1> <m1> .\n"
        "_:bag <rdf:_2> <m2> .\n");
    expand_containers(g);
    const std::size_t after1 = g.triples.size();
    enrich_graph(g);
    const std::size_t after2 = g.triples.size();
    CHECK(after2 >= after1);  // enrichment never shrinks
    refine_graph(g);
    CHECK(g.triples.size() <= after2);  // refinement never grows
    CHECK(contains(g, "y", "p", "x"));
    CHECK(contains(g, "p", "rdfs:domain", "B"));
}
