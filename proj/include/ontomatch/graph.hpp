#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ontomatch/resource.hpp"

namespace ontomatch {

// Literal texts attached to one element, captured at load time. Refinement
// later strips the triples themselves, so SDD construction and the weak
// element test read from here.
struct ElementAnnotations {
    std::vector<std::string> labels;
    std::vector<std::string> comments;
    std::vector<std::string> others;

    bool empty() const { return labels.empty() && comments.empty() && others.empty(); }
};

using AnnotationTable = std::unordered_map<ResourceId, ElementAnnotations>;

enum class ElementKind : std::uint8_t { Concept, Property, Instance, Other };

// Multigraph over interned resources. Triples are stored in insertion order;
// parallel edges are allowed until hybridization.
class RawOntologyGraph {
public:
    ResourceStore store;
    std::vector<Triple> triples;
    AnnotationTable annotations;
    std::vector<std::string> warnings;
    bool empty_warning = false;

    const Resource& res(ResourceId id) const { return store[id]; }

    ResourceId find_iri(std::string_view raw_iri) const {
        return store.find(ResourceKind::Iri, normalize_iri(raw_iri));
    }

    void add_triple(ResourceId s, ResourceId p, ResourceId o,
                    TripleOrigin origin = TripleOrigin::Source) {
        triples.push_back(Triple{s, p, o, origin, 0});
    }

    bool has_triple(ResourceId s, ResourceId p, ResourceId o) const;

    // Subjects, predicates and objects of triples matching the given pattern
    // (kNoResource = wildcard).
    std::vector<std::size_t> match(ResourceId s, ResourceId p, ResourceId o) const;
};

struct CyclicListError : std::runtime_error {
    explicit CyclicListError(std::string blank) :
        std::runtime_error("cyclic rdf:List through " + blank), blank_id(std::move(blank)) {}
    std::string blank_id;
};

// Phase 1: rdf:Bag/Seq/Alt memberships and rdf:List chains become direct
// statements from the referencing subject to each member; container nodes and
// their bookkeeping triples are dropped. Cyclic lists are left untouched and
// reported in g.warnings.
void expand_containers(RawOntologyGraph& g);

// Phase 2: runs the five enrichment rules to fixpoint. Added triples carry
// origin Enriched. Monotone and idempotent.
void enrich_graph(RawOntologyGraph& g);

// Phase 3: drops annotation, header, version, metamodel-typing and
// owl:Thing/owl:Nothing triples.
void refine_graph(RawOntologyGraph& g);

// Vertex of a hybrid graph = any resource appearing as subject or object
// (predicates get a vertex only when some statement mentions them there,
// plus every classified element is guaranteed a vertex slot).
class HybridOntologyGraph {
public:
    ResourceStore store;                 // moved from the processed raw graph
    std::vector<Triple> triples;         // direct edges + bipartite trios
    AnnotationTable annotations;
    std::unordered_map<std::uint32_t, Triple> reified_triples;  // trio id -> original

    // Element classification, from the *source* declarations.
    std::unordered_map<ResourceId, ElementKind> element_index;
    std::vector<ResourceId> concepts;    // sorted by id
    std::vector<ResourceId> properties;
    std::vector<ResourceId> instances;

    // Graph structure. degree counts every incidence of a vertex as subject
    // or object (predicates do not add to degree).
    std::unordered_map<ResourceId, std::vector<std::size_t>> out_edges;  // by subject
    std::unordered_map<ResourceId, std::vector<std::size_t>> in_edges;   // by object
    std::unordered_map<ResourceId, std::uint32_t> degree;

    const Resource& res(ResourceId id) const { return store[id]; }

    ElementKind kind_of(ResourceId id) const {
        auto it = element_index.find(id);
        return it == element_index.end() ? ElementKind::Other : it->second;
    }

    ResourceId find_iri(std::string_view raw_iri) const {
        return store.find(ResourceKind::Iri, normalize_iri(raw_iri));
    }

    std::uint32_t degree_of(ResourceId id) const {
        auto it = degree.find(id);
        return it == degree.end() ? 0 : it->second;
    }

    // Reconverts reification trios back into their original triples and
    // returns the full statement multiset (direct edges + reconverted ones).
    std::vector<Triple> dehybridize() const;
};

// Classifies elements from source-declared statements, then converts every
// ordered vertex pair with k > 1 parallel edges into 1 direct edge (the one
// with the lexicographically smallest predicate) plus k-1 reification trios.
HybridOntologyGraph build_hybrid_graph(RawOntologyGraph g);

// Full phase 1-3 pipeline plus hybridization.
HybridOntologyGraph process_ontology(RawOntologyGraph g);

}  // namespace ontomatch
