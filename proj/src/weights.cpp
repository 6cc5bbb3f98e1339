#include "ontomatch/weights.hpp"

#include <algorithm>
#include <cmath>

namespace ontomatch {

double attenuation(double x, double m, double epsilon) {
    if (x < 1.0 || x > m) {
        throw DomainError("attenuation requires 1 <= x <= m");
    }
    if (epsilon <= 0.0) throw DomainError("attenuation requires epsilon > 0");
    return 0.5 * (1.0 / x + (1.0 - std::log(x) / std::log(m + epsilon)));
}

void WeightParams::validate() const {
    auto simplex = [](const auto& g) {
        double sum = 0.0;
        for (const double v : g) {
            if (v < 0.0 || v > 1.0) return false;
            sum += v;
        }
        return std::abs(sum - 1.0) < 1e-9;
    };
    if (!simplex(gamma_concept) || !simplex(gamma_property) || !simplex(gamma_instance)) {
        throw DomainError("gamma weights must lie on the unit simplex");
    }
    if (lambda <= 0.0 || lambda > 1.0) throw DomainError("lambda must be in (0, 1]");
    if (epsilon <= 0.0) throw DomainError("epsilon must be positive");
}

double triple_conductance(double mu_s, std::uint32_t degree_s, double mu_p, double mu_o,
                          std::uint32_t degree_o) {
    const double ds = degree_s == 0 ? 1.0 : static_cast<double>(degree_s);
    const double dobj = degree_o == 0 ? 1.0 : static_cast<double>(degree_o);
    return (mu_s / ds + mu_p + mu_o / dobj) / 3.0;
}

namespace {

// Shortest hop count to a hierarchy root along the given "sub of" edges,
// plus one. Elements outside the hierarchy (or stuck in a cycle) get 1.
std::unordered_map<ResourceId, std::uint32_t> hierarchy_depths(
    const std::vector<std::pair<ResourceId, ResourceId>>& sub_edges) {
    std::unordered_map<ResourceId, std::vector<ResourceId>> children;
    std::unordered_map<ResourceId, bool> has_parent;
    for (const auto& [sub, super] : sub_edges) {
        if (sub == super) continue;
        children[super].push_back(sub);
        has_parent[sub] = true;
        has_parent.try_emplace(super, false);
    }
    std::vector<ResourceId> frontier;
    std::unordered_map<ResourceId, std::uint32_t> depth;
    for (const auto& [node, parented] : has_parent) {
        if (!parented) {
            depth[node] = 1;
            frontier.push_back(node);
        }
    }
    while (!frontier.empty()) {
        std::vector<ResourceId> next;
        for (const ResourceId n : frontier) {
            auto it = children.find(n);
            if (it == children.end()) continue;
            for (const ResourceId c : it->second) {
                if (depth.emplace(c, depth[n] + 1).second) next.push_back(c);
            }
        }
        frontier = std::move(next);
    }
    return depth;
}

}  // namespace

ConductanceGraph build_conductance_graph(const HybridOntologyGraph& g, const WeightParams& params) {
    params.validate();
    ConductanceGraph cg;
    cg.base = &g;

    const auto logical = g.dehybridize();
    const ResourceId type_id = g.store.find(ResourceKind::Iri, vocab::rdf_type);
    const ResourceId sub_class = g.store.find(ResourceKind::Iri, vocab::rdfs_sub_class_of);
    const ResourceId sub_prop = g.store.find(ResourceKind::Iri, vocab::rdfs_sub_property_of);

    // Frequency: appearances in the hybrid graph's triples.
    std::unordered_map<ResourceId, std::uint32_t> freq;
    for (const auto& t : g.triples) {
        ++freq[t.s];
        ++freq[t.p];
        ++freq[t.o];
    }
    double max_f = 0.0;
    for (const auto& [_, f] : freq) max_f = std::max(max_f, static_cast<double>(f));

    // Hierarchy depths over concepts and properties, shared maximum.
    std::vector<std::pair<ResourceId, ResourceId>> sub_c, sub_p;
    for (const auto& t : logical) {
        if (sub_class != kNoResource && t.p == sub_class) sub_c.emplace_back(t.s, t.o);
        if (sub_prop != kNoResource && t.p == sub_prop) sub_p.emplace_back(t.s, t.o);
    }
    auto depth_c = hierarchy_depths(sub_c);
    auto depth_p = hierarchy_depths(sub_p);
    auto depth_of = [&](ResourceId e) -> std::uint32_t {
        auto it = depth_c.find(e);
        if (it != depth_c.end()) return it->second;
        it = depth_p.find(e);
        if (it != depth_p.end()) return it->second;
        return 1;
    };
    double max_dh = 1.0;
    for (const ResourceId e : g.concepts) max_dh = std::max(max_dh, static_cast<double>(depth_of(e)));
    for (const ResourceId e : g.properties) max_dh = std::max(max_dh, static_cast<double>(depth_of(e)));

    // Instance spaces: typed subjects per concept, distinct (s, o) pairs per
    // property. Logical statements, so reified parallels count too.
    std::unordered_map<ResourceId, std::uint32_t> isp;
    std::unordered_map<ResourceId, std::unordered_set<std::uint64_t>> prop_pairs;
    std::unordered_map<ResourceId, std::vector<ResourceId>> types_of;  // instance -> concepts
    std::unordered_map<ResourceId, std::uint32_t> concept_instances;
    for (const auto& t : logical) {
        if (type_id != kNoResource && t.p == type_id && !g.res(t.o).is_primitive) {
            ++concept_instances[t.o];
            types_of[t.s].push_back(t.o);
        }
        if (!g.res(t.p).is_primitive) {
            prop_pairs[t.p].insert((static_cast<std::uint64_t>(t.s) << 32) | t.o);
        }
    }
    for (const auto& [c, n] : concept_instances) isp[c] = n;
    for (const auto& [p, pairs] : prop_pairs) isp[p] = static_cast<std::uint32_t>(pairs.size());
    double max_isp = 0.0;
    for (const auto& [_, n] : isp) max_isp = std::max(max_isp, static_cast<double>(n));

    // Instance description counts: distinct non-primitive predicates on the
    // instance, split into literal-valued and resource-valued.
    std::unordered_map<ResourceId, std::unordered_set<ResourceId>> dp_preds, op_preds;
    for (const auto& t : logical) {
        if (g.res(t.p).is_primitive) continue;
        if (g.res(t.o).kind == ResourceKind::Literal) {
            dp_preds[t.s].insert(t.p);
        } else {
            op_preds[t.s].insert(t.p);
        }
    }
    double max_dp = 0.0, max_op = 0.0;
    for (const ResourceId a : g.instances) {
        auto d = dp_preds.find(a);
        auto o = op_preds.find(a);
        if (d != dp_preds.end()) max_dp = std::max(max_dp, static_cast<double>(d->second.size()));
        if (o != op_preds.end()) max_op = std::max(max_op, static_cast<double>(o->second.size()));
    }

    double max_conc_inst = 0.0;
    for (const ResourceId a : g.instances) {
        auto it = types_of.find(a);
        if (it == types_of.end()) continue;
        std::uint32_t best = 0;
        bool first = true;
        for (const ResourceId c : it->second) {
            const std::uint32_t n = concept_instances[c];
            best = first ? n : std::min(best, n);
            first = false;
        }
        max_conc_inst = std::max(max_conc_inst, static_cast<double>(best));
    }

    const double eps = params.epsilon;
    auto mu_f_of = [&](ResourceId e, ElementWeightRow& row) {
        auto it = freq.find(e);
        if (it == freq.end() || max_f < 1.0) return;
        row.mu_f = attenuation(it->second, max_f, eps);
        row.has_f = true;
    };

    auto finalize = [](ElementWeightRow& row,
                       std::initializer_list<std::pair<double, std::pair<double, bool>>> terms) {
        double total_gamma = 0.0, sum = 0.0;
        for (const auto& [gamma, term] : terms) {
            if (!term.second) continue;
            total_gamma += gamma;
            sum += gamma * term.first;
        }
        row.mu = total_gamma > 0.0 ? sum / total_gamma : 0.0;
    };

    // Every vertex and every classified element gets a weight row.
    std::unordered_set<ResourceId> universe;
    for (const auto& t : g.triples) {
        universe.insert(t.s);
        universe.insert(t.p);
        universe.insert(t.o);
    }
    for (const auto& [e, _] : g.element_index) universe.insert(e);

    for (const ResourceId e : universe) {
        ElementWeightRow row;
        mu_f_of(e, row);
        const ElementKind kind = g.kind_of(e);
        if (kind == ElementKind::Concept || kind == ElementKind::Property) {
            row.mu_h = static_cast<double>(depth_of(e)) / max_dh;
            row.has_h = true;
            auto it = isp.find(e);
            if (it != isp.end() && it->second >= 1 && max_isp >= 1.0) {
                row.mu_isp = attenuation(it->second, max_isp, eps);
                row.has_isp = true;
            }
            const auto& gamma = kind == ElementKind::Concept ? params.gamma_concept
                                                             : params.gamma_property;
            finalize(row, {{gamma[0], {row.mu_f, row.has_f}},
                           {gamma[1], {row.mu_h, row.has_h}},
                           {gamma[2], {row.mu_isp, row.has_isp}}});
        } else if (kind == ElementKind::Instance) {
            if (max_dp + max_op >= 1.0) {
                auto d = dp_preds.find(e);
                auto o = op_preds.find(e);
                const double dp = d == dp_preds.end() ? 0.0 : static_cast<double>(d->second.size());
                const double op = o == op_preds.end() ? 0.0 : static_cast<double>(o->second.size());
                row.mu_id = (dp + op) / (max_dp + max_op);
                row.has_id = true;
            }
            auto ti = types_of.find(e);
            if (ti != types_of.end() && max_conc_inst >= 1.0) {
                std::uint32_t best = 0;
                bool first = true;
                for (const ResourceId c : ti->second) {
                    const std::uint32_t n = concept_instances[c];
                    best = first ? n : std::min(best, n);
                    first = false;
                }
                if (best >= 1) {
                    row.mu_io = attenuation(best, max_conc_inst, eps);
                    row.has_io = true;
                }
            }
            finalize(row, {{params.gamma_instance[0], {row.mu_id, row.has_id}},
                           {params.gamma_instance[1], {row.mu_io, row.has_io}}});
            // bare instances (no description, no type) fall back to frequency
            if (!row.has_id && !row.has_io) row.mu = row.mu_f;
        } else {
            // metadata, literals, blank and reification vertices
            row.mu = row.mu_f;
        }
        cg.weights.emplace(e, row);
    }

    // Vertex slots: everything that can sit on a circuit path, plus isolated
    // elements so property extraction can attach auxiliary edges.
    auto slot = [&](ResourceId r) {
        auto it = cg.slot_of.find(r);
        if (it != cg.slot_of.end()) return it->second;
        const auto s = static_cast<std::uint32_t>(cg.slot_to_resource.size());
        cg.slot_of.emplace(r, s);
        cg.slot_to_resource.push_back(r);
        return s;
    };
    for (const auto& t : g.triples) {
        slot(t.s);
        slot(t.o);
    }
    for (const auto& [e, _] : g.element_index) slot(e);

    cg.problem.lambda = params.lambda;
    cg.triple_conductance.resize(g.triples.size(), 0.0);
    for (std::size_t i = 0; i < g.triples.size(); ++i) {
        const auto& t = g.triples[i];
        const double w = triple_conductance(cg.mu(t.s), g.degree_of(t.s), cg.mu(t.p),
                                            cg.mu(t.o), g.degree_of(t.o));
        if (!(w > 0.0)) throw std::logic_error("non-positive triple conductance");
        cg.triple_conductance[i] = w;
        cg.problem.edges.push_back(CircuitEdge{slot(t.s), slot(t.o), w, static_cast<std::int32_t>(i)});
    }
    cg.problem.vertex_count = static_cast<std::uint32_t>(cg.slot_to_resource.size());

    for (const auto& e : cg.problem.edges) {
        if (e.u == e.v) continue;
        cg.sink_conductance[cg.slot_to_resource[e.u]] += params.lambda * e.conductance;
        cg.sink_conductance[cg.slot_to_resource[e.v]] += params.lambda * e.conductance;
    }
    return cg;
}

}  // namespace ontomatch
