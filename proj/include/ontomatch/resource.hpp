#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ontomatch {

enum class ResourceKind : std::uint8_t { Iri, Literal, Blank };

using ResourceId = std::uint32_t;
inline constexpr ResourceId kNoResource = 0xffffffffu;

// One term of a triple. IRIs are stored in normalized form: the RDF, RDFS,
// OWL and XSD namespaces collapse to the rdf:/rdfs:/owl:/xsd: prefixes so
// both spellings of a vocabulary term compare equal.
struct Resource {
    ResourceKind kind = ResourceKind::Iri;
    std::string value;
    bool is_primitive = false;
};

enum class TripleOrigin : std::uint8_t { Source, Enriched, BipartiteExpansion };

struct Triple {
    ResourceId s = kNoResource;
    ResourceId p = kNoResource;
    ResourceId o = kNoResource;
    TripleOrigin origin = TripleOrigin::Source;
    // Shared id linking the three triples of one reification trio; 0 otherwise.
    std::uint32_t reify_id = 0;

    friend bool operator==(const Triple&, const Triple&) = default;
};

namespace vocab {
inline constexpr std::string_view rdf_type = "rdf:type";
inline constexpr std::string_view rdf_subject = "rdf:subject";
inline constexpr std::string_view rdf_predicate = "rdf:predicate";
inline constexpr std::string_view rdf_object = "rdf:object";
inline constexpr std::string_view rdf_first = "rdf:first";
inline constexpr std::string_view rdf_rest = "rdf:rest";
inline constexpr std::string_view rdf_nil = "rdf:nil";
inline constexpr std::string_view rdf_property = "rdf:Property";
inline constexpr std::string_view rdf_bag = "rdf:Bag";
inline constexpr std::string_view rdf_seq = "rdf:Seq";
inline constexpr std::string_view rdf_alt = "rdf:Alt";
inline constexpr std::string_view rdf_list = "rdf:List";
inline constexpr std::string_view rdfs_sub_class_of = "rdfs:subClassOf";
inline constexpr std::string_view rdfs_sub_property_of = "rdfs:subPropertyOf";
inline constexpr std::string_view rdfs_domain = "rdfs:domain";
inline constexpr std::string_view rdfs_range = "rdfs:range";
inline constexpr std::string_view rdfs_label = "rdfs:label";
inline constexpr std::string_view rdfs_comment = "rdfs:comment";
inline constexpr std::string_view rdfs_see_also = "rdfs:seeAlso";
inline constexpr std::string_view rdfs_is_defined_by = "rdfs:isDefinedBy";
inline constexpr std::string_view rdfs_class = "rdfs:Class";
inline constexpr std::string_view owl_class = "owl:Class";
inline constexpr std::string_view owl_thing = "owl:Thing";
inline constexpr std::string_view owl_nothing = "owl:Nothing";
inline constexpr std::string_view owl_ontology = "owl:Ontology";
inline constexpr std::string_view owl_object_property = "owl:ObjectProperty";
inline constexpr std::string_view owl_datatype_property = "owl:DatatypeProperty";
inline constexpr std::string_view owl_annotation_property = "owl:AnnotationProperty";
inline constexpr std::string_view owl_symmetric_property = "owl:SymmetricProperty";
inline constexpr std::string_view owl_transitive_property = "owl:TransitiveProperty";
inline constexpr std::string_view owl_functional_property = "owl:FunctionalProperty";
inline constexpr std::string_view owl_inverse_functional_property = "owl:InverseFunctionalProperty";
inline constexpr std::string_view owl_equivalent_class = "owl:equivalentClass";
inline constexpr std::string_view owl_equivalent_property = "owl:equivalentProperty";
inline constexpr std::string_view owl_same_as = "owl:sameAs";
inline constexpr std::string_view owl_intersection_of = "owl:intersectionOf";
inline constexpr std::string_view owl_union_of = "owl:unionOf";
inline constexpr std::string_view owl_one_of = "owl:oneOf";
inline constexpr std::string_view owl_version_info = "owl:versionInfo";
inline constexpr std::string_view owl_prior_version = "owl:priorVersion";
inline constexpr std::string_view owl_backward_compatible_with = "owl:backwardCompatibleWith";
inline constexpr std::string_view owl_incompatible_with = "owl:incompatibleWith";
inline constexpr std::string_view owl_deprecated_class = "owl:DeprecatedClass";
inline constexpr std::string_view owl_deprecated_property = "owl:DeprecatedProperty";
}  // namespace vocab

// Collapses the well-known vocabulary namespaces to prefixed form; any other
// IRI is returned unchanged.
std::string normalize_iri(std::string_view iri);

// True for IRIs in the rdf:/rdfs:/owl:/xsd: namespaces (after normalization).
bool is_primitive_iri(std::string_view normalized_iri);

// Fragment after the last '#', '/' or ':' of an IRI; the whole IRI if none.
std::string_view local_name(std::string_view iri);

// True for rdf:_1, rdf:_2, ... container-membership predicates.
bool is_container_membership(std::string_view normalized_iri);

// Interning store for the resources of one ontology. Ids are dense and
// stable; literals and IRIs with equal text never collide.
class ResourceStore {
public:
    ResourceId intern(ResourceKind kind, std::string_view value);
    ResourceId find(ResourceKind kind, std::string_view value) const;

    const Resource& operator[](ResourceId id) const { return resources_[id]; }
    std::size_t size() const { return resources_.size(); }

    ResourceId intern_iri(std::string_view raw_iri) {
        const std::string norm = normalize_iri(raw_iri);
        return intern(ResourceKind::Iri, norm);
    }

private:
    static std::string key_of(ResourceKind kind, std::string_view value);

    std::vector<Resource> resources_;
    std::unordered_map<std::string, ResourceId> index_;
};

}  // namespace ontomatch
