#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ontomatch/graph.hpp"

namespace ontomatch {

struct MalformedLineError : std::runtime_error {
    MalformedLineError(std::size_t line, const std::string& what) :
        std::runtime_error("line " + std::to_string(line) + ": " + what), lineno(line) {}
    std::size_t lineno;
};

struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line-oriented N-Triples subset:
//   <subject> <predicate> <object> .
// IRIs in angle brackets, literals in double quotes (optional ^^<type> or
// @lang suffix accepted and dropped), blank nodes as _:id, '#' comment lines
// and blank lines ignored. Throws MalformedLineError on the first bad line.
// Annotation text (labels, comments, declared annotation properties) is
// captured into the returned graph's side table.
RawOntologyGraph parse_ntriples(std::istream& in);
RawOntologyGraph load_ontology(const std::string& path);

void serialize_ntriples(const RawOntologyGraph& g, std::ostream& out);
void save_ontology(const RawOntologyGraph& g, const std::string& path);

// Writes one term the way the parser reads it.
std::string format_term(const Resource& r);

}  // namespace ontomatch
