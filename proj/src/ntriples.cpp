#include "ontomatch/ntriples.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ontomatch {

namespace {

void skip_ws(std::string_view& s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

struct Term {
    ResourceKind kind;
    std::string value;  // raw (IRI un-normalized, literal unescaped)
};

// Parses one term off the front of s. Throws std::runtime_error with a short
// reason; the caller attaches the line number.
Term parse_term(std::string_view& s, bool object_position) {
    skip_ws(s);
    if (s.empty()) throw std::runtime_error("unexpected end of statement");

    if (s.front() == '<') {
        const auto end = s.find('>');
        if (end == std::string_view::npos) throw std::runtime_error("unterminated IRI");
        std::string iri{s.substr(1, end - 1)};
        if (iri.empty()) throw std::runtime_error("empty IRI");
        s.remove_prefix(end + 1);
        return {ResourceKind::Iri, std::move(iri)};
    }
    if (s.starts_with("_:")) {
        std::size_t end = 2;
        while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
        if (end == 2) throw std::runtime_error("empty blank node id");
        std::string id{s.substr(0, end)};
        s.remove_prefix(end);
        return {ResourceKind::Blank, std::move(id)};
    }
    if (s.front() == '"') {
        if (!object_position) throw std::runtime_error("literal outside object position");
        std::string text;
        std::size_t i = 1;
        for (; i < s.size(); ++i) {
            const char c = s[i];
            if (c == '\\') {
                if (i + 1 >= s.size()) throw std::runtime_error("dangling escape in literal");
                const char e = s[++i];
                switch (e) {
                    case 'n': text.push_back('\n'); break;
                    case 't': text.push_back('\t'); break;
                    case 'r': text.push_back('\r'); break;
                    case '"': text.push_back('"'); break;
                    case '\\': text.push_back('\\'); break;
                    default: throw std::runtime_error("unsupported escape in literal");
                }
                continue;
            }
            if (c == '"') break;
            text.push_back(c);
        }
        if (i >= s.size()) throw std::runtime_error("unterminated literal");
        s.remove_prefix(i + 1);
        // Datatype / language tags are accepted and dropped; the lexical form
        // is what downstream text processing uses.
        if (s.starts_with("^^")) {
            s.remove_prefix(2);
            if (!s.starts_with("<")) throw std::runtime_error("malformed datatype suffix");
            const auto end = s.find('>');
            if (end == std::string_view::npos) throw std::runtime_error("unterminated datatype IRI");
            s.remove_prefix(end + 1);
        } else if (s.starts_with("@")) {
            std::size_t end = 1;
            while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
            if (end == 1) throw std::runtime_error("empty language tag");
            s.remove_prefix(end);
        }
        return {ResourceKind::Literal, std::move(text)};
    }
    throw std::runtime_error("unrecognized term");
}

bool is_annotation_predicate(std::string_view norm) {
    return norm == vocab::rdfs_label || norm == vocab::rdfs_comment ||
           norm == vocab::rdfs_see_also || norm == vocab::rdfs_is_defined_by;
}

}  // namespace

RawOntologyGraph parse_ntriples(std::istream& in) {
    RawOntologyGraph g;
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::string_view s{line};
        if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
        skip_ws(s);
        if (s.empty() || s.front() == '#') continue;

        try {
            Term subj = parse_term(s, false);
            Term pred = parse_term(s, false);
            if (pred.kind != ResourceKind::Iri) throw std::runtime_error("predicate must be an IRI");
            Term obj = parse_term(s, true);
            skip_ws(s);
            if (s.empty() || s.front() != '.') throw std::runtime_error("missing terminating '.'");
            s.remove_prefix(1);
            skip_ws(s);
            if (!s.empty() && s.front() != '#') throw std::runtime_error("trailing content after '.'");

            const ResourceId sid = subj.kind == ResourceKind::Iri
                                       ? g.store.intern_iri(subj.value)
                                       : g.store.intern(subj.kind, subj.value);
            const ResourceId pid = g.store.intern_iri(pred.value);
            const ResourceId oid = obj.kind == ResourceKind::Iri
                                       ? g.store.intern_iri(obj.value)
                                       : g.store.intern(obj.kind, obj.value);
            g.add_triple(sid, pid, oid);
        } catch (const std::runtime_error& e) {
            throw MalformedLineError(lineno, e.what());
        }
    }

    // Annotation side table. Declared annotation properties are only known
    // once the whole file is read, so this runs as a second pass.
    std::unordered_set<ResourceId> custom_annotation_preds;
    const ResourceId type_id = g.store.find(ResourceKind::Iri, vocab::rdf_type);
    const ResourceId annot_prop = g.store.find(ResourceKind::Iri, vocab::owl_annotation_property);
    if (type_id != kNoResource && annot_prop != kNoResource) {
        for (const auto& t : g.triples) {
            if (t.p == type_id && t.o == annot_prop) custom_annotation_preds.insert(t.s);
        }
    }
    for (const auto& t : g.triples) {
        const Resource& obj = g.res(t.o);
        if (obj.kind != ResourceKind::Literal) continue;
        const Resource& pred = g.res(t.p);
        if (pred.value == vocab::rdfs_label) {
            g.annotations[t.s].labels.push_back(obj.value);
        } else if (pred.value == vocab::rdfs_comment) {
            g.annotations[t.s].comments.push_back(obj.value);
        } else if (is_annotation_predicate(pred.value) || custom_annotation_preds.count(t.p)) {
            g.annotations[t.s].others.push_back(obj.value);
        }
    }

    g.empty_warning = g.triples.empty();
    if (g.empty_warning) g.warnings.push_back("ontology contains no triples");
    return g;
}

RawOntologyGraph load_ontology(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open ontology file: " + path);
    return parse_ntriples(in);
}

std::string format_term(const Resource& r) {
    switch (r.kind) {
        case ResourceKind::Blank:
            return r.value;
        case ResourceKind::Iri:
            return "<" + r.value + ">";
        case ResourceKind::Literal: {
            std::string out = "\"";
            for (const char c : r.value) {
                switch (c) {
                    case '"': out += "\\\""; break;
                    case '\\': out += "\\\\"; break;
                    case '\n': out += "\\n"; break;
                    case '\t': out += "\\t"; break;
                    case '\r': out += "\\r"; break;
                    default: out.push_back(c);
                }
            }
            out.push_back('"');
            return out;
        }
    }
    return {};
}

void serialize_ntriples(const RawOntologyGraph& g, std::ostream& out) {
    for (const auto& t : g.triples) {
        out << format_term(g.res(t.s)) << ' ' << format_term(g.res(t.p)) << ' '
            << format_term(g.res(t.o)) << " .\n";
    }
}

void save_ontology(const RawOntologyGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FileError("cannot write ontology file: " + path);
    serialize_ntriples(g, out);
}

}  // namespace ontomatch
