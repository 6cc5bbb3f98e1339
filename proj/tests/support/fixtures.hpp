#pragma once

// Shared test fixtures: survey-shaped ontologies for the weak-informativeness
// checks and a structured synthetic ontology for twin-graph benchmarks.

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fixtures {

inline const std::vector<std::string>& english_words() {
    static const std::vector<std::string> words{
        "conference", "paper",   "person",   "author",    "review",  "account",
        "address",    "article", "book",     "chapter",   "city",    "committee",
        "date",       "editor",  "email",    "event",     "journal", "meeting",
        "member",     "name",    "number",   "office",    "page",    "phone",
        "place",      "program", "publisher", "reference", "school",  "science",
        "session",    "street",  "student",  "talk",      "team",    "title",
        "topic",      "track",   "volume",   "workshop",  "writes",  "reads",
        "has",        "first",   "last",     "organizes", "attends", "publishes",
        "edits",      "chairs",  "submits",  "accepts",   "reviews", "presents",
        "invites",    "hosts",   "funds",    "grants",    "issues",  "prints",
        "records",    "lists",   "covers",   "holds",     "joins",   "leads",
        "marks",      "notes",   "opens",    "owns",      "links",   "keeps"};
    return words;
}

// Ontology with the given weak/total counts per element kind. Weak elements
// get opaque names; informative ones get dictionary words.
inline std::string make_survey_ontology(int weak_c, int total_c, int weak_p, int total_p,
                                        int weak_i, int total_i) {
    const auto& words = english_words();
    std::ostringstream out;
    std::size_t w = 0;
    auto next_word = [&] {
        const std::size_t i = w++;
        const std::size_t cycle = i / words.size();
        return words[i % words.size()] + (cycle > 0 ? std::to_string(cycle) : "");
    };

    std::vector<std::string> concepts;
    for (int i = 0; i < total_c; ++i) {
        const std::string name = i < weak_c ? "zqxv" + std::to_string(i) : next_word();
        concepts.push_back(name);
        out << "<http://o/" << name << "> <rdf:type> <owl:Class> .\n";
    }
    for (int i = 0; i < total_p; ++i) {
        const std::string name = i < weak_p ? "jwkq" + std::to_string(i) : next_word();
        out << "<http://o/" << name << "> <rdf:type> <owl:ObjectProperty> .\n";
        out << "<http://o/" << name << "> <rdfs:domain> <http://o/" << concepts[i % concepts.size()]
            << "> .\n";
    }
    for (int i = 0; i < total_i; ++i) {
        const std::string name = i < weak_i ? "xbvn" + std::to_string(i) : next_word();
        out << "<http://o/" << name << "> <rdf:type> <http://o/" << concepts[i % concepts.size()]
            << "> .\n";
    }
    return out.str();
}

}  // namespace fixtures
