#include "ontomatch/graph.hpp"

#include <algorithm>
#include <cstdint>

namespace ontomatch {

namespace {

inline std::uint64_t pair_key(ResourceId a, ResourceId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct TripleKey {
    std::uint64_t sp;
    ResourceId o;
    friend bool operator==(const TripleKey&, const TripleKey&) = default;
};

struct TripleKeyHash {
    std::size_t operator()(const TripleKey& k) const {
        std::size_t h = std::hash<std::uint64_t>{}(k.sp);
        h ^= std::hash<std::uint32_t>{}(k.o) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

using TripleSet = std::unordered_set<TripleKey, TripleKeyHash>;

TripleKey key_of(const Triple& t) { return TripleKey{pair_key(t.s, t.p), t.o}; }

}  // namespace

bool RawOntologyGraph::has_triple(ResourceId s, ResourceId p, ResourceId o) const {
    for (const auto& t : triples) {
        if (t.s == s && t.p == p && t.o == o) return true;
    }
    return false;
}

std::vector<std::size_t> RawOntologyGraph::match(ResourceId s, ResourceId p, ResourceId o) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const auto& t = triples[i];
        if ((s == kNoResource || t.s == s) && (p == kNoResource || t.p == p) &&
            (o == kNoResource || t.o == o)) {
            out.push_back(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Phase 1: containers and collections
// ---------------------------------------------------------------------------

void expand_containers(RawOntologyGraph& g) {
    const ResourceId type_id = g.store.find(ResourceKind::Iri, vocab::rdf_type);
    const ResourceId first_id = g.store.find(ResourceKind::Iri, vocab::rdf_first);
    const ResourceId rest_id = g.store.find(ResourceKind::Iri, vocab::rdf_rest);
    const ResourceId nil_id = g.store.find(ResourceKind::Iri, vocab::rdf_nil);

    auto is_container_type = [&](ResourceId o) {
        const auto& v = g.res(o).value;
        return v == vocab::rdf_bag || v == vocab::rdf_seq || v == vocab::rdf_alt;
    };

    std::unordered_set<ResourceId> cyclic;  // list heads we must not touch

    for (bool changed = true; changed;) {
        changed = false;

        // Per-node structural lookups for this pass.
        std::unordered_map<ResourceId, std::vector<std::size_t>> members;   // container -> rdf:_n triples
        std::unordered_map<ResourceId, std::size_t> first_of, rest_of;      // list node -> triple index
        std::unordered_set<ResourceId> typed_container, list_node;

        for (std::size_t i = 0; i < g.triples.size(); ++i) {
            const auto& t = g.triples[i];
            const auto& pred = g.res(t.p).value;
            if (t.p == type_id && type_id != kNoResource) {
                if (is_container_type(t.o)) typed_container.insert(t.s);
                if (g.res(t.o).value == vocab::rdf_list) list_node.insert(t.s);
            }
            if (is_container_membership(pred)) {
                members[t.s].push_back(i);
                typed_container.insert(t.s);
            }
            if (first_id != kNoResource && t.p == first_id) {
                first_of[t.s] = i;
                list_node.insert(t.s);
            }
            if (rest_id != kNoResource && t.p == rest_id) {
                rest_of[t.s] = i;
                list_node.insert(t.s);
            }
        }
        if (typed_container.empty() && list_node.empty()) break;

        std::vector<bool> remove(g.triples.size(), false);
        std::vector<Triple> added;

        // rdf:Bag / rdf:Seq / rdf:Alt
        for (const ResourceId c : typed_container) {
            auto mit = members.find(c);
            std::vector<std::size_t> idx = mit == members.end() ? std::vector<std::size_t>{} : mit->second;
            // rdf:_n order
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
                const auto& pa = g.res(g.triples[a].p).value;
                const auto& pb = g.res(g.triples[b].p).value;
                const long na = std::stol(std::string(pa.substr(5)));
                const long nb = std::stol(std::string(pb.substr(5)));
                return na != nb ? na < nb : a < b;
            });

            bool touched = false;
            for (std::size_t i = 0; i < g.triples.size(); ++i) {
                const auto& t = g.triples[i];
                if (t.o != c || remove[i]) continue;
                if (t.p == type_id || is_container_membership(g.res(t.p).value)) continue;
                remove[i] = true;
                touched = true;
                for (const std::size_t m : idx) {
                    added.push_back(Triple{t.s, t.p, g.triples[m].o, t.origin, 0});
                }
            }
            // drop the container bookkeeping whether or not it was referenced
            for (const std::size_t m : idx) {
                if (!remove[m]) { remove[m] = true; touched = true; }
            }
            for (std::size_t i = 0; i < g.triples.size(); ++i) {
                const auto& t = g.triples[i];
                if (!remove[i] && t.s == c && t.p == type_id && is_container_type(t.o)) {
                    remove[i] = true;
                    touched = true;
                }
            }
            if (touched) changed = true;
        }

        // rdf:List chains, walked from referenced heads
        for (std::size_t i = 0; i < g.triples.size(); ++i) {
            const auto& ref = g.triples[i];
            if (remove[i] || cyclic.count(ref.o)) continue;
            const bool head = list_node.count(ref.o) &&
                              ref.p != first_id && ref.p != rest_id && ref.p != type_id;
            if (!head) continue;

            std::vector<ResourceId> chain_members;
            std::vector<ResourceId> chain_nodes;
            std::unordered_set<ResourceId> seen;
            ResourceId cur = ref.o;
            bool ok = true;
            while (cur != nil_id && cur != kNoResource) {
                if (!seen.insert(cur).second) {
                    g.warnings.push_back("cyclic rdf:List through " + g.res(cur).value);
                    cyclic.insert(ref.o);
                    ok = false;
                    break;
                }
                chain_nodes.push_back(cur);
                auto fit = first_of.find(cur);
                if (fit == first_of.end()) break;  // ragged chain: stop collecting
                chain_members.push_back(g.triples[fit->second].o);
                auto rit = rest_of.find(cur);
                cur = rit == rest_of.end() ? kNoResource : g.triples[rit->second].o;
            }
            if (!ok) continue;

            remove[i] = true;
            changed = true;
            for (const ResourceId m : chain_members) {
                added.push_back(Triple{ref.s, ref.p, m, ref.origin, 0});
            }
            for (const ResourceId n : chain_nodes) {
                auto fit = first_of.find(n);
                if (fit != first_of.end()) remove[fit->second] = true;
                auto rit = rest_of.find(n);
                if (rit != rest_of.end()) remove[rit->second] = true;
                for (std::size_t j = 0; j < g.triples.size(); ++j) {
                    const auto& t = g.triples[j];
                    if (t.s == n && t.p == type_id && g.res(t.o).value == vocab::rdf_list) {
                        remove[j] = true;
                    }
                }
            }
        }

        if (!changed) break;
        std::vector<Triple> next;
        next.reserve(g.triples.size() + added.size());
        for (std::size_t i = 0; i < g.triples.size(); ++i) {
            if (!remove[i]) next.push_back(g.triples[i]);
        }
        next.insert(next.end(), added.begin(), added.end());
        g.triples = std::move(next);
    }
}

// ---------------------------------------------------------------------------
// Phase 2: enrichment
// ---------------------------------------------------------------------------

void enrich_graph(RawOntologyGraph& g) {
    auto id = [&](std::string_view v) { return g.store.find(ResourceKind::Iri, v); };
    const ResourceId type_id = id(vocab::rdf_type);
    const ResourceId sub_class = id(vocab::rdfs_sub_class_of);
    const ResourceId sub_prop = id(vocab::rdfs_sub_property_of);
    const ResourceId domain_id = id(vocab::rdfs_domain);
    const ResourceId range_id = id(vocab::rdfs_range);
    const ResourceId sym_id = id(vocab::owl_symmetric_property);
    const ResourceId trans_id = id(vocab::owl_transitive_property);
    const ResourceId eq_prop = id(vocab::owl_equivalent_property);
    const ResourceId eq_class = id(vocab::owl_equivalent_class);
    const ResourceId same_as = id(vocab::owl_same_as);
    const ResourceId inter_of = id(vocab::owl_intersection_of);
    const ResourceId union_of = id(vocab::owl_union_of);
    const ResourceId one_of = id(vocab::owl_one_of);

    TripleSet existing;
    for (const auto& t : g.triples) existing.insert(key_of(t));

    // rdfs:subClassOf etc. may be missing from the input vocabulary; intern
    // on demand when a rule needs to emit it.
    auto need = [&](std::string_view v) { return g.store.intern(ResourceKind::Iri, std::string(v)); };

    for (bool changed = true; changed;) {
        changed = false;
        std::vector<Triple> added;
        auto emit = [&](ResourceId s, ResourceId p, ResourceId o) {
            if (s == kNoResource || p == kNoResource || o == kNoResource) return;
            const TripleKey k{pair_key(s, p), o};
            if (existing.count(k)) return;
            existing.insert(k);
            added.push_back(Triple{s, p, o, TripleOrigin::Enriched, 0});
        };

        std::unordered_map<ResourceId, std::vector<const Triple*>> by_pred;
        std::unordered_set<ResourceId> symmetric_props, transitive_props;
        for (const auto& t : g.triples) {
            by_pred[t.p].push_back(&t);
            if (t.p == type_id) {
                if (t.o == sym_id) symmetric_props.insert(t.s);
                if (t.o == trans_id) transitive_props.insert(t.s);
            }
        }
        auto preds = [&](ResourceId p) -> const std::vector<const Triple*>& {
            static const std::vector<const Triple*> none;
            auto it = by_pred.find(p);
            return it == by_pred.end() ? none : it->second;
        };

        // Step 1: sub-properties inherit domain and range.
        for (const Triple* sp : preds(sub_prop)) {
            for (const Triple* d : preds(domain_id)) {
                if (d->s == sp->o) emit(sp->s, domain_id, d->o);
            }
            for (const Triple* r : preds(range_id)) {
                if (r->s == sp->o) emit(sp->s, range_id, r->o);
            }
        }

        // Step 2: concept axioms.
        if (inter_of != kNoResource) {
            for (const Triple* ax : preds(inter_of)) {
                emit(ax->s, sub_class != kNoResource ? sub_class : need(vocab::rdfs_sub_class_of), ax->o);
                for (const Triple* sc : preds(sub_class)) {
                    if (sc->o == ax->s) emit(sc->s, sub_class, ax->o);
                }
            }
        }
        if (union_of != kNoResource) {
            for (const Triple* ax : preds(union_of)) {
                emit(ax->o, sub_class != kNoResource ? sub_class : need(vocab::rdfs_sub_class_of), ax->s);
                for (const Triple* sc : preds(sub_class)) {
                    if (sc->s == ax->s) emit(ax->o, sub_class, sc->o);
                }
            }
        }
        if (one_of != kNoResource) {
            for (const Triple* ax : preds(one_of)) {
                emit(ax->o, type_id != kNoResource ? type_id : need(vocab::rdf_type), ax->s);
            }
        }
        if (eq_class != kNoResource) {
            const ResourceId sc = sub_class != kNoResource ? sub_class : need(vocab::rdfs_sub_class_of);
            for (const Triple* ax : preds(eq_class)) {
                emit(ax->s, sc, ax->o);
                emit(ax->o, sc, ax->s);
            }
        }

        // Step 3: property axioms.
        if (!symmetric_props.empty() || !transitive_props.empty()) {
            for (const auto& t : g.triples) {
                if (symmetric_props.count(t.p)) emit(t.o, t.p, t.s);
            }
            for (const ResourceId p : transitive_props) {
                const auto& stmts = preds(p);
                std::unordered_map<ResourceId, std::vector<ResourceId>> succ;
                for (const Triple* t : stmts) succ[t->s].push_back(t->o);
                for (const Triple* t : stmts) {
                    auto it = succ.find(t->o);
                    if (it == succ.end()) continue;
                    for (const ResourceId c : it->second) emit(t->s, p, c);
                }
            }
        }
        if (eq_prop != kNoResource) {
            std::vector<std::pair<ResourceId, ResourceId>> eq_pairs;
            for (const Triple* ax : preds(eq_prop)) {
                eq_pairs.emplace_back(ax->s, ax->o);
            }
            if (!eq_pairs.empty()) {
                for (const auto& t : g.triples) {
                    for (const auto& [p1, p2] : eq_pairs) {
                        if (t.p == p1) emit(t.s, p2, t.o);
                        if (t.p == p2) emit(t.s, p1, t.o);
                    }
                }
            }
        }

        // Step 4: owl:sameAs resources share all statements.
        if (same_as != kNoResource && !preds(same_as).empty()) {
            std::vector<std::pair<ResourceId, ResourceId>> pairs;
            for (const Triple* ax : preds(same_as)) {
                pairs.emplace_back(ax->s, ax->o);
                pairs.emplace_back(ax->o, ax->s);
            }
            for (const auto& t : g.triples) {
                if (t.p == same_as) continue;
                for (const auto& [a, b] : pairs) {
                    if (t.s == a) emit(b, t.p, t.o);
                    if (t.o == a) emit(t.s, t.p, b);
                }
            }
        }

        // Step 5: sub-concepts inherit the domain attachments of their supers.
        for (const Triple* d : preds(domain_id)) {
            for (const Triple* sc : preds(sub_class)) {
                if (sc->o == d->o) emit(d->s, domain_id, sc->s);
            }
        }

        if (!added.empty()) {
            changed = true;
            g.triples.insert(g.triples.end(), added.begin(), added.end());
        }
    }
}

// ---------------------------------------------------------------------------
// Phase 3: refinement
// ---------------------------------------------------------------------------

void refine_graph(RawOntologyGraph& g) {
    auto id = [&](std::string_view v) { return g.store.find(ResourceKind::Iri, v); };
    const ResourceId type_id = id(vocab::rdf_type);

    auto is_version_pred = [&](const std::string& v) {
        return v == vocab::owl_version_info || v == vocab::owl_prior_version ||
               v == vocab::owl_backward_compatible_with || v == vocab::owl_incompatible_with;
    };
    auto is_annotation_pred = [&](const std::string& v) {
        return v == vocab::rdfs_label || v == vocab::rdfs_comment ||
               v == vocab::rdfs_see_also || v == vocab::rdfs_is_defined_by;
    };

    std::unordered_set<ResourceId> annotation_props, header_subjects;
    const ResourceId annot_prop = id(vocab::owl_annotation_property);
    const ResourceId ontology_id = id(vocab::owl_ontology);
    if (type_id != kNoResource) {
        for (const auto& t : g.triples) {
            if (t.p != type_id) continue;
            if (t.o == annot_prop && annot_prop != kNoResource) annotation_props.insert(t.s);
            if (t.o == ontology_id && ontology_id != kNoResource) header_subjects.insert(t.s);
        }
    }

    auto mentions_top_bottom = [&](const Triple& t) {
        for (const ResourceId r : {t.s, t.p, t.o}) {
            const auto& v = g.res(r).value;
            if (v == vocab::owl_thing || v == vocab::owl_nothing) return true;
        }
        return false;
    };

    std::vector<Triple> kept;
    kept.reserve(g.triples.size());
    for (const auto& t : g.triples) {
        const Resource& pred = g.res(t.p);
        const Resource& obj = g.res(t.o);

        if (is_annotation_pred(pred.value)) continue;
        if (annotation_props.count(t.p) && obj.kind == ResourceKind::Literal) continue;
        if (is_version_pred(pred.value)) continue;
        if (t.p == type_id && obj.kind == ResourceKind::Iri && obj.is_primitive) continue;
        if (header_subjects.count(t.s) &&
            (pred.is_primitive || obj.kind == ResourceKind::Literal)) {
            continue;
        }
        if (mentions_top_bottom(t)) continue;
        kept.push_back(t);
    }
    g.triples = std::move(kept);
}

// ---------------------------------------------------------------------------
// Element classification
// ---------------------------------------------------------------------------

namespace {

std::unordered_map<ResourceId, ElementKind> classify(const RawOntologyGraph& g) {
    auto id = [&](std::string_view v) { return g.store.find(ResourceKind::Iri, v); };
    const ResourceId type_id = id(vocab::rdf_type);
    const ResourceId sub_class = id(vocab::rdfs_sub_class_of);
    const ResourceId sub_prop = id(vocab::rdfs_sub_property_of);
    const ResourceId domain_id = id(vocab::rdfs_domain);
    const ResourceId range_id = id(vocab::rdfs_range);
    const ResourceId eq_class = id(vocab::owl_equivalent_class);
    const ResourceId eq_prop = id(vocab::owl_equivalent_property);
    const ResourceId same_as = id(vocab::owl_same_as);
    const ResourceId inter_of = id(vocab::owl_intersection_of);
    const ResourceId union_of = id(vocab::owl_union_of);
    const ResourceId one_of = id(vocab::owl_one_of);

    std::unordered_map<ResourceId, ElementKind> kinds;
    auto set_kind = [&](ResourceId r, ElementKind k) {
        if (r == kNoResource) return;
        const Resource& res = g.res(r);
        if (res.kind == ResourceKind::Literal) return;
        if (res.kind == ResourceKind::Iri && res.is_primitive) return;
        kinds.emplace(r, k);  // first classification wins
    };

    auto type_is = [&](const Triple& t, std::string_view v) {
        return t.p == type_id && g.res(t.o).value == v;
    };

    // Explicit declarations first.
    for (const auto& t : g.triples) {
        if (t.origin != TripleOrigin::Source) continue;
        if (type_is(t, vocab::owl_object_property) || type_is(t, vocab::owl_datatype_property) ||
            type_is(t, vocab::owl_annotation_property) || type_is(t, vocab::rdf_property) ||
            type_is(t, vocab::owl_symmetric_property) || type_is(t, vocab::owl_transitive_property) ||
            type_is(t, vocab::owl_functional_property) ||
            type_is(t, vocab::owl_inverse_functional_property)) {
            set_kind(t.s, ElementKind::Property);
        }
    }
    for (const auto& t : g.triples) {
        if (t.origin != TripleOrigin::Source) continue;
        if (type_is(t, vocab::owl_class) || type_is(t, vocab::rdfs_class)) {
            set_kind(t.s, ElementKind::Concept);
        }
    }

    // Structural evidence.
    for (const auto& t : g.triples) {
        if (t.origin != TripleOrigin::Source) continue;
        if (t.p == sub_prop || t.p == eq_prop) {
            set_kind(t.s, ElementKind::Property);
            set_kind(t.o, ElementKind::Property);
        }
        if (t.p == domain_id || t.p == range_id) {
            set_kind(t.s, ElementKind::Property);
            set_kind(t.o, ElementKind::Concept);
        }
        if (!g.res(t.p).is_primitive) set_kind(t.p, ElementKind::Property);
    }
    for (const auto& t : g.triples) {
        if (t.origin != TripleOrigin::Source) continue;
        if (t.p == sub_class || t.p == eq_class || t.p == inter_of || t.p == union_of) {
            set_kind(t.s, ElementKind::Concept);
            set_kind(t.o, ElementKind::Concept);
        }
        if (t.p == one_of) {
            set_kind(t.s, ElementKind::Concept);
            set_kind(t.o, ElementKind::Instance);
        }
    }
    for (const auto& t : g.triples) {
        if (t.origin != TripleOrigin::Source) continue;
        if (t.p == type_id && !g.res(t.o).is_primitive) {
            set_kind(t.o, ElementKind::Concept);
            set_kind(t.s, ElementKind::Instance);
        }
        if (t.p == same_as) {
            set_kind(t.s, ElementKind::Instance);
            set_kind(t.o, ElementKind::Instance);
        }
    }
    // Untyped resources taking part in property statements are individuals.
    for (const auto& t : g.triples) {
        if (t.origin != TripleOrigin::Source) continue;
        if (!g.res(t.p).is_primitive) {
            set_kind(t.s, ElementKind::Instance);
            set_kind(t.o, ElementKind::Instance);
        }
    }
    return kinds;
}

}  // namespace

// ---------------------------------------------------------------------------
// Hybridization
// ---------------------------------------------------------------------------

HybridOntologyGraph build_hybrid_graph(RawOntologyGraph g) {
    HybridOntologyGraph h;
    h.element_index = classify(g);
    h.annotations = std::move(g.annotations);

    // Group parallel edges by ordered (subject, object) pair.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < g.triples.size(); ++i) {
        groups[pair_key(g.triples[i].s, g.triples[i].o)].push_back(i);
    }

    std::vector<std::uint64_t> keys;
    keys.reserve(groups.size());
    for (const auto& [k, _] : groups) keys.push_back(k);
    std::sort(keys.begin(), keys.end());

    std::uint32_t next_reify = 1;
    const ResourceId rdf_sub = g.store.intern(ResourceKind::Iri, std::string(vocab::rdf_subject));
    const ResourceId rdf_pred = g.store.intern(ResourceKind::Iri, std::string(vocab::rdf_predicate));
    const ResourceId rdf_obj = g.store.intern(ResourceKind::Iri, std::string(vocab::rdf_object));

    for (const std::uint64_t key : keys) {
        auto& idx = groups[key];
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            const auto& pa = g.res(g.triples[a].p).value;
            const auto& pb = g.res(g.triples[b].p).value;
            if (pa != pb) return pa < pb;
            return a < b;
        });
        h.triples.push_back(g.triples[idx[0]]);
        for (std::size_t j = 1; j < idx.size(); ++j) {
            const Triple& orig = g.triples[idx[j]];
            std::string blank;
            do {
                blank = "_:stmt" + std::to_string(next_reify++);
            } while (g.store.find(ResourceKind::Blank, blank) != kNoResource);
            const ResourceId tid = g.store.intern(ResourceKind::Blank, blank);
            const std::uint32_t rid = next_reify - 1;
            h.reified_triples.emplace(rid, orig);
            h.triples.push_back(Triple{tid, rdf_sub, orig.s, TripleOrigin::BipartiteExpansion, rid});
            h.triples.push_back(Triple{tid, rdf_pred, orig.p, TripleOrigin::BipartiteExpansion, rid});
            h.triples.push_back(Triple{tid, rdf_obj, orig.o, TripleOrigin::BipartiteExpansion, rid});
        }
    }

    h.store = std::move(g.store);

    for (std::size_t i = 0; i < h.triples.size(); ++i) {
        const auto& t = h.triples[i];
        h.out_edges[t.s].push_back(i);
        h.in_edges[t.o].push_back(i);
        ++h.degree[t.s];
        ++h.degree[t.o];
    }

    for (const auto& [r, kind] : h.element_index) {
        switch (kind) {
            case ElementKind::Concept: h.concepts.push_back(r); break;
            case ElementKind::Property: h.properties.push_back(r); break;
            case ElementKind::Instance: h.instances.push_back(r); break;
            case ElementKind::Other: break;
        }
    }
    std::sort(h.concepts.begin(), h.concepts.end());
    std::sort(h.properties.begin(), h.properties.end());
    std::sort(h.instances.begin(), h.instances.end());
    return h;
}

std::vector<Triple> HybridOntologyGraph::dehybridize() const {
    std::vector<Triple> out;
    std::unordered_set<std::uint32_t> seen;
    for (const auto& t : triples) {
        if (t.origin != TripleOrigin::BipartiteExpansion) {
            out.push_back(t);
            continue;
        }
        if (seen.insert(t.reify_id).second) {
            out.push_back(reified_triples.at(t.reify_id));
        }
    }
    return out;
}

HybridOntologyGraph process_ontology(RawOntologyGraph g) {
    expand_containers(g);
    enrich_graph(g);
    // Classification reads source declarations and must run before refinement
    // strips the typing triples; build_hybrid_graph classifies internally, so
    // keep a copy of the pre-refinement kinds and restore them.
    auto kinds = classify(g);
    refine_graph(g);
    HybridOntologyGraph h = build_hybrid_graph(std::move(g));
    h.element_index = std::move(kinds);
    h.concepts.clear();
    h.properties.clear();
    h.instances.clear();
    for (const auto& [r, kind] : h.element_index) {
        switch (kind) {
            case ElementKind::Concept: h.concepts.push_back(r); break;
            case ElementKind::Property: h.properties.push_back(r); break;
            case ElementKind::Instance: h.instances.push_back(r); break;
            case ElementKind::Other: break;
        }
    }
    std::sort(h.concepts.begin(), h.concepts.end());
    std::sort(h.properties.begin(), h.properties.end());
    std::sort(h.instances.begin(), h.instances.end());
    return h;
}

}  // namespace ontomatch
