#include "ontomatch/wio.hpp"

#include <unordered_set>

namespace ontomatch {

WioReport detect_wio(const HybridOntologyGraph& g, const Lexicon& lexicon,
                     double phi, double delta) {
    if (lexicon.empty()) throw EmptyLexiconError{};

    WioReport report;
    report.phi = phi;
    report.delta = delta;

    auto words_of = [&](ResourceId e) {
        std::unordered_set<std::string> words;
        const Resource& r = g.res(e);
        for (auto& tok : tokenize(local_name(r.value))) words.insert(std::move(tok));
        auto it = g.annotations.find(e);
        if (it != g.annotations.end()) {
            for (const auto& text : it->second.labels) {
                for (auto& tok : tokenize(text)) words.insert(std::move(tok));
            }
            for (const auto& text : it->second.comments) {
                for (auto& tok : tokenize(text)) words.insert(std::move(tok));
            }
            for (const auto& text : it->second.others) {
                for (auto& tok : tokenize(text)) words.insert(std::move(tok));
            }
        }
        return words;
    };

    auto scan = [&](const std::vector<ResourceId>& elems, ElementKind kind,
                    std::uint32_t& weak, std::uint32_t& count) {
        for (const ResourceId e : elems) {
            const auto words = words_of(e);
            ElementWordStats stats;
            stats.kind = kind;
            stats.word_count = static_cast<std::uint32_t>(words.size());
            if (stats.word_count == 0) stats.word_count = 1;  // |D_e| >= 1
            for (const auto& w : words) {
                if (lexicon.contains(w)) ++stats.lexicon_hits;
            }
            stats.is_weak =
                static_cast<double>(stats.lexicon_hits) / stats.word_count < phi;
            if (stats.is_weak) {
                ++weak;
                ++report.weak_count;
            }
            ++count;
            ++report.total;
            report.per_element.emplace(e, stats);
        }
    };

    scan(g.concepts, ElementKind::Concept, report.weak_concepts, report.concepts);
    scan(g.properties, ElementKind::Property, report.weak_properties, report.properties);
    scan(g.instances, ElementKind::Instance, report.weak_instances, report.instances);

    report.ratio = report.total == 0
                       ? 0.0
                       : static_cast<double>(report.weak_count) / report.total;
    report.is_wio = report.ratio > delta;
    return report;
}

}  // namespace ontomatch
