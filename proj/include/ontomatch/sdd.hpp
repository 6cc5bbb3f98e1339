#pragma once

#include <map>
#include <string>
#include <unordered_map>

#include "ontomatch/graph.hpp"
#include "ontomatch/subgraph.hpp"
#include "ontomatch/text.hpp"

namespace ontomatch {

// Weighted token bag describing one element. Ordered map keeps iteration and
// serialization deterministic.
struct Sdd {
    ResourceId element = kNoResource;
    std::map<std::string, double> terms;

    void add(const std::string& token, double weight) {
        if (weight == 0.0) return;
        terms[token] += weight;
    }
    void add_scaled(const Sdd& other, double factor) {
        for (const auto& [tok, w] : other.terms) add(tok, w * factor);
    }
    bool empty() const { return terms.empty(); }
};

struct SddWeights {
    double local_name = 1.0;   // phi_1
    double label = 1.0;        // phi_2
    double comment = 0.5;      // phi_3
    double annotation = 0.25;  // phi_4
};

// Builds and caches base documents for one ontology. Equivalence groups
// (owl:equivalentClass / owl:equivalentProperty / owl:sameAs) share one
// merged base document.
class SddBuilder {
public:
    SddBuilder(const HybridOntologyGraph& g, SddWeights weights = {});

    // Local name + labels + comments + other annotations, phi-weighted.
    const Sdd& base(ResourceId e) const;

    // Base document plus hierarchy neighbours (1/dist), siblings, attached
    // domain/range properties and direct instances, all constrained to the
    // element's semantic subgraph.
    Sdd concept_document(ResourceId concept, const SemanticSubgraph& subgraph) const;

    // Base document plus the base documents of domain concepts and range
    // elements appearing in the subgraph.
    Sdd property_document(ResourceId property, const SemanticSubgraph& subgraph) const;

    // Recursive four-class description of a blank node; weights fall off as
    // 1/depth and cycles terminate on revisit.
    Sdd blank_document(ResourceId blank) const;

    const HybridOntologyGraph& graph() const { return *g_; }

private:
    Sdd build_base(ResourceId e) const;
    const Sdd& base_or_blank(ResourceId e) const;
    void blank_walk(ResourceId blank, std::size_t depth,
                    std::unordered_set<ResourceId>& visited, Sdd& out) const;

    const HybridOntologyGraph* g_;
    SddWeights weights_;
    std::vector<Triple> logical_;
    std::unordered_map<ResourceId, std::vector<std::size_t>> by_subject_;
    std::unordered_map<ResourceId, std::vector<std::size_t>> by_object_;
    mutable std::unordered_map<ResourceId, Sdd> base_cache_;
    mutable std::unordered_map<ResourceId, Sdd> blank_cache_;
    std::unordered_map<ResourceId, ResourceId> equivalence_rep_;
    std::unordered_map<ResourceId, std::vector<ResourceId>> equivalence_group_;

    ResourceId type_id_, sub_class_, domain_id_, range_id_;
};

}  // namespace ontomatch
