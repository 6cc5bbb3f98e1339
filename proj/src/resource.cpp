#include "ontomatch/resource.hpp"

#include <array>
#include <cctype>

namespace ontomatch {

namespace {

struct NamespaceMap {
    std::string_view full;
    std::string_view prefix;
};

constexpr std::array<NamespaceMap, 4> kNamespaces{{
    {"http://www.w3.org/1999/02/22-rdf-syntax-ns#", "rdf:"},
    {"http://www.w3.org/2000/01/rdf-schema#", "rdfs:"},
    {"http://www.w3.org/2002/07/owl#", "owl:"},
    {"http://www.w3.org/2001/XMLSchema#", "xsd:"},
}};

}  // namespace

std::string normalize_iri(std::string_view iri) {
    for (const auto& ns : kNamespaces) {
        if (iri.size() > ns.full.size() && iri.substr(0, ns.full.size()) == ns.full) {
            std::string out{ns.prefix};
            out.append(iri.substr(ns.full.size()));
            return out;
        }
    }
    return std::string{iri};
}

bool is_primitive_iri(std::string_view iri) {
    return iri.starts_with("rdf:") || iri.starts_with("rdfs:") ||
           iri.starts_with("owl:") || iri.starts_with("xsd:");
}

std::string_view local_name(std::string_view iri) {
    const auto pos = iri.find_last_of("#/:");
    if (pos == std::string_view::npos || pos + 1 >= iri.size()) return iri;
    return iri.substr(pos + 1);
}

bool is_container_membership(std::string_view iri) {
    if (!iri.starts_with("rdf:_") || iri.size() <= 5) return false;
    for (std::size_t i = 5; i < iri.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(iri[i]))) return false;
    }
    return true;
}

std::string ResourceStore::key_of(ResourceKind kind, std::string_view value) {
    std::string key;
    key.reserve(value.size() + 1);
    switch (kind) {
        case ResourceKind::Iri: key.push_back('i'); break;
        case ResourceKind::Literal: key.push_back('l'); break;
        case ResourceKind::Blank: key.push_back('b'); break;
    }
    key.append(value);
    return key;
}

ResourceId ResourceStore::intern(ResourceKind kind, std::string_view value) {
    const std::string key = key_of(kind, value);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const auto id = static_cast<ResourceId>(resources_.size());
    resources_.push_back(Resource{
        kind, std::string{value},
        kind == ResourceKind::Iri && is_primitive_iri(value)});
    index_.emplace(std::move(key), id);
    return id;
}

ResourceId ResourceStore::find(ResourceKind kind, std::string_view value) const {
    auto it = index_.find(key_of(kind, value));
    return it == index_.end() ? kNoResource : it->second;
}

}  // namespace ontomatch
