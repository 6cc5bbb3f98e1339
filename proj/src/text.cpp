#include "ontomatch/text.hpp"

#include <cctype>
#include <fstream>

namespace ontomatch {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            tokens.push_back(cur);
            cur.clear();
        }
    };

    char prev = '\0';
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        const unsigned char uc = static_cast<unsigned char>(c);
        if (!std::isalnum(uc)) {
            flush();
            prev = '\0';
            continue;
        }
        const bool camel = std::isupper(uc) && std::islower(static_cast<unsigned char>(prev));
        const bool alpha_digit = (std::isdigit(uc) && std::isalpha(static_cast<unsigned char>(prev))) ||
                                 (std::isalpha(uc) && std::isdigit(static_cast<unsigned char>(prev)));
        // "IOError" -> "IO" + "Error": upper run followed by lower starts a token
        const bool upper_run_end = std::isupper(static_cast<unsigned char>(prev)) &&
                                   std::islower(uc) && cur.size() > 1;
        if (camel || alpha_digit) {
            flush();
        } else if (upper_run_end) {
            const char keep = cur.back();
            cur.pop_back();
            flush();
            cur.push_back(std::tolower(static_cast<unsigned char>(keep)));
        }
        cur.push_back(static_cast<char>(std::tolower(uc)));
        prev = c;
    }
    flush();
    return tokens;
}

std::string stem(std::string_view token) {
    std::string t{token};
    auto ends = [&](std::string_view suf) {
        return t.size() > suf.size() && t.ends_with(suf);
    };
    if (ends("ing") && t.size() >= 6) {
        t.resize(t.size() - 3);
    } else if (ends("ed") && t.size() >= 5) {
        t.resize(t.size() - 2);
    } else if (ends("es") && t.size() >= 5) {
        t.resize(t.size() - 2);
    } else if (ends("s") && t.size() >= 4 && !t.ends_with("ss")) {
        t.resize(t.size() - 1);
    }
    return t;
}

const std::unordered_set<std::string>& default_stopwords() {
    static const std::unordered_set<std::string> words{
        "a",  "an", "and", "are", "as",  "at",  "be", "by",  "for", "from",
        "has", "have", "in", "is", "it", "its", "of", "on",  "or",  "that",
        "the", "this", "to", "was", "which", "with"};
    return words;
}

std::vector<std::string> preprocess_tokens(std::string_view text,
                                           const std::unordered_set<std::string>& stopwords) {
    std::vector<std::string> out;
    for (const auto& tok : tokenize(text)) {
        if (stopwords.count(tok)) continue;
        out.push_back(stem(tok));
    }
    return out;
}

Lexicon Lexicon::from_words(std::vector<std::string> words) {
    Lexicon lex;
    for (auto& w : words) lex.words_.insert(std::move(w));
    return lex;
}

Lexicon Lexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
    Lexicon lex;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lex.words_.insert(line);
    }
    return lex;
}

}  // namespace ontomatch
