#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace ontomatch {

// Splits on non-alphanumerics, camelCase boundaries and letter/digit
// boundaries; lowercases. "ConferencePaper" -> {conference, paper},
// "has_author2" -> {has, author, 2}.
std::vector<std::string> tokenize(std::string_view text);

// Lightweight suffix stripping: -ing, -ed, -es, -s.
std::string stem(std::string_view token);

// The default stop-word list compiled into the binary; mirrors
// data/stopwords.txt.
const std::unordered_set<std::string>& default_stopwords();

// tokenize + stop-word removal + stemming, for SDD construction.
std::vector<std::string> preprocess_tokens(std::string_view text,
                                           const std::unordered_set<std::string>& stopwords = default_stopwords());

struct EmptyLexiconError : std::runtime_error {
    EmptyLexiconError() : std::runtime_error("lexicon is empty") {}
};

// Word list, one lowercase word per line.
class Lexicon {
public:
    static Lexicon from_words(std::vector<std::string> words);
    static Lexicon load(const std::string& path);

    bool contains(const std::string& word) const { return words_.count(word) > 0; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

private:
    std::unordered_set<std::string> words_;
};

}  // namespace ontomatch
