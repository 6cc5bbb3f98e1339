#include "ontomatch/subgraph.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <thread>
#include <unordered_set>

namespace ontomatch {

namespace {

constexpr double kFlowEps = 1e-15;

struct DownhillEdge {
    std::uint32_t edge;
    std::uint32_t to;
    double current;
};

// Positive-current orientation of every edge, grouped by tail vertex.
std::vector<std::vector<DownhillEdge>> downhill_adjacency(const CircuitProblem& problem,
                                                          const CircuitSolution& sol) {
    std::vector<std::vector<DownhillEdge>> adj(problem.vertex_count);
    for (std::uint32_t i = 0; i < problem.edges.size(); ++i) {
        const auto& e = problem.edges[i];
        const double c = sol.edge_current[i];
        if (c > kFlowEps) {
            adj[e.u].push_back({i, e.v, c});
        } else if (c < -kFlowEps) {
            adj[e.v].push_back({i, e.u, -c});
        }
    }
    for (auto& lst : adj) {
        std::sort(lst.begin(), lst.end(),
                  [](const DownhillEdge& a, const DownhillEdge& b) { return a.edge < b.edge; });
    }
    return adj;
}

}  // namespace

double delivered_current(std::span<const std::uint32_t> path, const CircuitProblem& problem,
                         const CircuitSolution& sol) {
    if (path.empty()) return 0.0;
    double delivered = sol.out_current[path[0]];
    for (std::size_t i = 1; i < path.size(); ++i) {
        const std::uint32_t u = path[i - 1];
        const std::uint32_t v = path[i];
        if (!(sol.voltage[u] > sol.voltage[v])) throw NonDownhillPathError{};
        double flow = 0.0;
        for (std::size_t j = 0; j < problem.edges.size(); ++j) {
            const auto& e = problem.edges[j];
            if (e.u == u && e.v == v) flow += sol.edge_current[j];
            if (e.u == v && e.v == u) flow -= sol.edge_current[j];
        }
        if (!(flow > 0.0) || !(sol.out_current[u] > 0.0)) throw NonDownhillPathError{};
        delivered *= flow / sol.out_current[u];
    }
    return delivered;
}

double captured_flow(const CircuitProblem& problem, const CircuitSolution& sol,
                     std::uint32_t source, std::span<const std::uint32_t> edge_subset,
                     std::span<const std::uint32_t> free_edges) {
    std::unordered_set<std::uint32_t> allowed(edge_subset.begin(), edge_subset.end());
    allowed.insert(free_edges.begin(), free_edges.end());

    const auto adj = downhill_adjacency(problem, sol);
    constexpr std::size_t kPathCap = 1u << 20;

    double total = 0.0;
    std::size_t emitted = 0;

    // Iterative DFS over the subgraph's downhill DAG. Every prefix path
    // contributes its delivered current, so CF is monotone in added edges.
    struct Frame {
        std::uint32_t vertex;
        double delivered;
        std::size_t next;
    };
    std::vector<Frame> stack;
    stack.push_back({source, sol.out_current[source], 0});
    while (!stack.empty() && emitted < kPathCap) {
        Frame& f = stack.back();
        bool descended = false;
        while (f.next < adj[f.vertex].size()) {
            const auto& de = adj[f.vertex][f.next++];
            if (!allowed.count(de.edge)) continue;
            const double out = sol.out_current[f.vertex];
            if (!(out > 0.0)) continue;
            const double child = f.delivered * de.current / out;
            total += child;
            ++emitted;
            stack.push_back({de.to, child, 0});
            descended = true;
            break;
        }
        if (!descended) stack.pop_back();
    }
    return total;
}

ExtractedSubgraph extract_edges(const CircuitProblem& problem, const CircuitSolution& sol,
                                std::uint32_t source, std::size_t k) {
    ExtractedSubgraph out;
    const auto adj = downhill_adjacency(problem, sol);

    std::unordered_set<std::uint32_t> display_vertices{source};
    std::unordered_set<std::uint32_t> picked;          // triple edges only
    std::unordered_set<std::uint32_t> traversed_free;  // auxiliary edges used by paths

    // Voltage-descending processing order for the path DP.
    std::vector<std::uint32_t> order(problem.vertex_count);
    for (std::uint32_t i = 0; i < problem.vertex_count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (sol.voltage[a] != sol.voltage[b]) return sol.voltage[a] > sol.voltage[b];
        return a < b;
    });

    while (picked.size() < k) {
        const std::size_t budget = k - picked.size();
        const std::size_t jmax = budget + 1;  // +1: an auxiliary hop adds a vertex, no triple

        // best delivered current per (vertex, new-vertex count, new-edge flag)
        const std::size_t states = (jmax + 1) * 2;
        std::vector<double> best(problem.vertex_count * states,
                                 -std::numeric_limits<double>::infinity());
        struct Parent {
            std::uint32_t vertex = 0;
            std::uint32_t edge = 0;
            std::uint16_t j = 0;
            std::uint8_t b = 0;
            bool valid = false;
        };
        std::vector<Parent> parent(problem.vertex_count * states);
        auto idx = [&](std::uint32_t v, std::size_t j, unsigned b) {
            return v * states + j * 2 + b;
        };
        best[idx(source, 0, 0)] = sol.out_current[source];

        for (const std::uint32_t u : order) {
            const double out = sol.out_current[u];
            if (!(out > 0.0)) continue;
            for (std::size_t j = 0; j <= jmax; ++j) {
                for (unsigned b = 0; b < 2; ++b) {
                    const double val = best[idx(u, j, b)];
                    if (!(val > 0.0)) continue;
                    for (const auto& de : adj[u]) {
                        const bool is_triple = problem.edges[de.edge].triple >= 0;
                        const bool new_edge = is_triple && !picked.count(de.edge);
                        const std::size_t nj = j + (display_vertices.count(de.to) ? 0 : 1);
                        if (nj > jmax) continue;
                        const unsigned nb = b | (new_edge ? 1u : 0u);
                        const double nval = val * de.current / out;
                        if (nval > best[idx(de.to, nj, nb)]) {
                            best[idx(de.to, nj, nb)] = nval;
                            parent[idx(de.to, nj, nb)] = {u, de.edge,
                                                          static_cast<std::uint16_t>(j), static_cast<std::uint8_t>(b), true};
                        }
                    }
                }
            }
        }

        // Candidate paths, cheap-scored by delivered current per new vertex.
        struct Candidate {
            std::uint32_t v;
            std::size_t j;
            double cheap;
        };
        std::vector<Candidate> candidates;
        for (const std::uint32_t v : order) {
            for (std::size_t j = 0; j <= jmax; ++j) {
                const double val = best[idx(v, j, 1)];
                if (!(val > 0.0)) continue;
                candidates.push_back({v, j, j == 0 ? val * 1e6 : val / static_cast<double>(j)});
            }
        }
        if (candidates.empty()) break;
        std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
            if (a.cheap != b.cheap) return a.cheap > b.cheap;
            if (a.j != b.j) return a.j < b.j;
            return a.v < b.v;
        });
        constexpr std::size_t kRefine = 32;
        if (candidates.size() > kRefine) candidates.resize(kRefine);

        auto reconstruct = [&](const Candidate& c) {
            std::vector<std::uint32_t> edges;
            std::uint32_t v = c.v;
            std::size_t j = c.j;
            unsigned b = 1;
            while (!(v == source && j == 0 && b == 0)) {
                const Parent& p = parent[idx(v, j, b)];
                if (!p.valid) {
                    edges.clear();
                    break;
                }
                edges.push_back(p.edge);
                v = p.vertex;
                j = p.j;
                b = p.b;
            }
            std::reverse(edges.begin(), edges.end());
            return edges;
        };

        // Truncate a path at the triple budget; returns edges, new-edge and
        // new-vertex counts.
        auto truncate = [&](const std::vector<std::uint32_t>& edges) {
            std::vector<std::uint32_t> kept;
            std::size_t new_edges = 0, new_vertices = 0;
            std::unordered_set<std::uint32_t> seen;
            std::uint32_t at = source;
            for (const std::uint32_t e : edges) {
                const auto& edge = problem.edges[e];
                const std::uint32_t to = edge.u == at ? edge.v : edge.u;
                const bool is_triple = edge.triple >= 0;
                if (is_triple && !picked.count(e)) {
                    if (new_edges == budget) break;
                    ++new_edges;
                }
                kept.push_back(e);
                if (!display_vertices.count(to) && !seen.count(to)) {
                    ++new_vertices;
                    seen.insert(to);
                }
                at = to;
            }
            return std::tuple{kept, new_edges, new_vertices};
        };

        // Refine the shortlist by marginal captured flow per new vertex.
        const std::vector<std::uint32_t> base_free(traversed_free.begin(), traversed_free.end());
        const double cf_base = captured_flow(problem, sol, source, out.edges, base_free);
        std::vector<std::uint32_t> path_edges;
        double sel_score = -1.0;
        for (const Candidate& c : candidates) {
            auto full = reconstruct(c);
            if (full.empty()) continue;
            auto [kept, new_edges, new_vertices] = truncate(full);
            if (new_edges == 0) continue;
            std::vector<std::uint32_t> trial = out.edges;
            std::vector<std::uint32_t> trial_free = base_free;
            std::uint32_t at = source;
            for (const std::uint32_t e : kept) {
                const auto& edge = problem.edges[e];
                if (edge.triple >= 0) {
                    trial.push_back(e);
                } else {
                    trial_free.push_back(e);
                }
                at = edge.u == at ? edge.v : edge.u;
            }
            const double gain = captured_flow(problem, sol, source, trial, trial_free) - cf_base;
            const double score = gain / static_cast<double>(std::max<std::size_t>(new_vertices, 1));
            if (score > sel_score) {
                sel_score = score;
                path_edges = std::move(kept);
            }
        }
        if (path_edges.empty()) break;

        // apply the path, truncating at the budget
        PrefixPath rec;
        rec.vertices.push_back(source);
        rec.delivered = sol.out_current[source];
        std::uint32_t at = source;
        std::size_t added = 0;
        for (const std::uint32_t e : path_edges) {
            const auto& edge = problem.edges[e];
            const std::uint32_t to = edge.u == at ? edge.v : edge.u;
            const bool is_triple = edge.triple >= 0;
            if (is_triple && !picked.count(e)) {
                if (added == budget) break;
                picked.insert(e);
                out.edges.push_back(e);
                ++added;
            } else if (!is_triple) {
                traversed_free.insert(e);
            }
            rec.delivered *= std::abs(sol.edge_current[e]) / sol.out_current[at];
            rec.vertices.push_back(to);
            rec.edges.push_back(e);
            display_vertices.insert(to);
            at = to;
        }
        if (added == 0) break;  // nothing new fit the budget

        // a path extending an already recorded one replaces it
        std::erase_if(out.prefix_paths, [&](const PrefixPath& p) {
            return p.edges.size() <= rec.edges.size() &&
                   std::equal(p.edges.begin(), p.edges.end(), rec.edges.begin());
        });
        out.prefix_paths.push_back(std::move(rec));
    }

    std::vector<std::uint32_t> free_edges(traversed_free.begin(), traversed_free.end());
    std::sort(free_edges.begin(), free_edges.end());
    out.captured_flow = captured_flow(problem, sol, source, out.edges, free_edges);
    return out;
}

namespace {

// Property sources need an edge to each of their domain concepts so current
// reaches the statements the property participates in.
std::vector<CircuitEdge> property_aux_edges(const ConductanceGraph& cg, ResourceId element) {
    std::vector<CircuitEdge> aux;
    const auto& g = *cg.base;
    const ResourceId domain_id = g.store.find(ResourceKind::Iri, vocab::rdfs_domain);
    if (domain_id == kNoResource) return aux;
    const double mu_p = cg.mu(element);
    if (!(mu_p > 0.0)) return aux;
    std::unordered_set<ResourceId> seen;
    for (const auto& t : g.dehybridize()) {
        if (t.s != element || t.p != domain_id) continue;
        if (g.res(t.o).kind == ResourceKind::Literal) continue;
        if (!seen.insert(t.o).second) continue;
        aux.push_back(CircuitEdge{cg.slot(element), cg.slot(t.o), mu_p, -1});
    }
    return aux;
}

}  // namespace

SemanticSubgraph extract_subgraph(const ConductanceGraph& cg, ResourceId element, std::size_t k) {
    SemanticSubgraph out;
    out.element = element;
    if (k == 0) return out;

    const std::uint32_t source = cg.slot(element);
    CircuitProblem problem = cg.problem;
    if (cg.base->kind_of(element) == ElementKind::Property) {
        for (const auto& e : property_aux_edges(cg, element)) problem.edges.push_back(e);
    }

    const CircuitSolution sol = solve_circuit(problem, source);
    ExtractedSubgraph extracted = extract_edges(problem, sol, source, k);
    out.captured_flow = extracted.captured_flow;
    out.prefix_paths = std::move(extracted.prefix_paths);
    for (const std::uint32_t e : extracted.edges) {
        out.triples.push_back(static_cast<std::size_t>(problem.edges[e].triple));
    }
    return out;
}

ExtractionBatch extract_all(const ConductanceGraph& cg, std::size_t k, unsigned threads) {
    ExtractionBatch batch;
    std::vector<ResourceId> elements;
    elements.insert(elements.end(), cg.base->concepts.begin(), cg.base->concepts.end());
    elements.insert(elements.end(), cg.base->properties.begin(), cg.base->properties.end());

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, 16);

    struct Slot {
        bool ok = false;
        SemanticSubgraph sub;
        std::string error;
    };
    std::vector<Slot> results(elements.size());

    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                results[i].sub = extract_subgraph(cg, elements[i], k);
                results[i].ok = true;
            } catch (const std::exception& e) {
                results[i].error = e.what();
            }
        }
    };

    if (threads <= 1 || elements.size() < 8) {
        worker(0, elements.size());
    } else {
        std::vector<std::future<void>> futs;
        const std::size_t chunk = (elements.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t b = t * chunk;
            const std::size_t e = std::min(elements.size(), b + chunk);
            if (b >= e) break;
            futs.push_back(std::async(std::launch::async, worker, b, e));
        }
        for (auto& f : futs) f.get();
    }

    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (results[i].ok) {
            batch.subgraphs.emplace(elements[i], std::move(results[i].sub));
        } else {
            batch.failures.emplace_back(elements[i], results[i].error);
        }
    }
    return batch;
}

}  // namespace ontomatch
