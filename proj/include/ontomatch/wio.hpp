#pragma once

#include <cstdint>
#include <unordered_map>

#include "ontomatch/graph.hpp"
#include "ontomatch/text.hpp"

namespace ontomatch {

struct ElementWordStats {
    std::uint32_t word_count = 0;   // |D_e|
    std::uint32_t lexicon_hits = 0; // |D_e ∩ L|
    bool is_weak = false;
    ElementKind kind = ElementKind::Other;
};

struct WioReport {
    std::unordered_map<ResourceId, ElementWordStats> per_element;
    std::uint32_t weak_count = 0;   // w
    std::uint32_t total = 0;        // N
    double ratio = 0.0;             // w/N
    bool is_wio = false;
    double phi = 0.0;
    double delta = 0.0;

    // Per-kind tallies, for the survey-style printout.
    std::uint32_t weak_concepts = 0, concepts = 0;
    std::uint32_t weak_properties = 0, properties = 0;
    std::uint32_t weak_instances = 0, instances = 0;
};

// An element is weak when its literal tokens (local name, labels, comments,
// other annotations; set semantics) hit the lexicon at a rate below phi. The
// ontology is weak informative when the weak fraction over all declared
// concepts, properties and instances exceeds delta.
WioReport detect_wio(const HybridOntologyGraph& g, const Lexicon& lexicon,
                     double phi, double delta);

}  // namespace ontomatch
