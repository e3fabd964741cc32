#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace textclf {

using TokenList = std::vector<std::string>;

// Stop-word set plus an identifier recorded in saved models.
struct StopList {
    std::unordered_set<std::string> words;
    std::string list_id;

    std::size_t word_count() const { return words.size(); }
    bool contains(const std::string& token) const { return words.count(token) != 0; }

    // The checked-in 318-entry English list.
    static const StopList& english();

    // One word per line, UTF-8, '#'-prefixed comment lines ignored.
    // list_id becomes "custom-fnv1a:<16 hex digits>" over the parsed words.
    static StopList from_file(const std::string& path);
    static StopList parse(const std::string& file_contents, std::string list_id);
};

// Lowercases Unicode scalar values (simple, non-locale mapping). Everything
// else, including whitespace and punctuation, passes through unchanged.
std::string normalize(const std::string& text);

// Maximal runs of alphanumeric scalar values (Unicode letters and decimal
// digits; underscore is not a word character), dropping runs shorter than
// two scalars. Does not change case; feed normalized text.
TokenList tokenize(const std::string& text);

TokenList remove_stopwords(const TokenList& tokens, const StopList& stoplist);

// normalize + tokenize + remove_stopwords in one pass per document.
TokenList process_text(const std::string& text, const StopList& stoplist);

// Scalar-level helpers, exposed for tests.
bool is_alnum_scalar(std::uint32_t cp);
std::uint32_t to_lower_scalar(std::uint32_t cp);

}  // namespace textclf
