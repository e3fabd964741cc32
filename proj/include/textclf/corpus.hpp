#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "textclf/common.hpp"

namespace textclf {

// One parsed review line. Only `text` and `stars` are kept; every other
// JSON field is parsed and discarded.
struct ReviewRecord {
    std::string text;
    int stars = 0;                 // 1..5
    std::size_t source_line = 0;   // 1-based line number in the input
};

struct ParseError {
    enum class Code { MalformedJson, MissingField, BadStars };
    Code code;
    std::string detail;
    std::size_t line = 0;
};

std::string to_string(ParseError::Code code);

// Thrown by load_data under OnError::Abort.
class ParseException : public Error {
  public:
    explicit ParseException(ParseError err);
    const ParseError& error() const { return err_; }

  private:
    ParseError err_;
};

using ParseResult = std::variant<ReviewRecord, ParseError>;

// Parses one JSON-lines review (trailing newline already stripped).
ParseResult parse_review_line(const std::string& line, std::size_t line_number);

Label map_label(int stars, TaskKind task);

struct LabeledCorpus {
    std::vector<std::string> texts;
    std::vector<Label> labels;
    TaskKind task_kind = TaskKind::PosNeg;

    std::size_t size() const { return texts.size(); }
};

enum class OnError { Skip, Abort };

struct LoadResult {
    LabeledCorpus corpus;
    std::vector<std::size_t> source_lines;  // parallel to corpus rows
    std::size_t skipped = 0;                // malformed lines skipped
};

// Reads lines start_line..end_line (1-based, inclusive) from a
// newline-delimited UTF-8 stream. CRLF terminators are accepted. A stream
// that ends before end_line simply yields fewer records.
LoadResult load_data(std::istream& in, std::size_t start_line, std::size_t end_line,
                     TaskKind task, OnError on_error = OnError::Abort);

LoadResult load_data_file(const std::string& path, std::size_t start_line,
                          std::size_t end_line, TaskKind task,
                          OnError on_error = OnError::Abort);

// Counts '\n'-separated lines (a non-empty final line without a terminator
// counts too).
std::size_t count_lines(std::istream& in);
std::size_t count_lines_file(const std::string& path);

struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;  // half-open

    std::size_t size() const { return end - begin; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

// First floor(train_fraction * n_records) records train, the rest test.
std::pair<IndexRange, IndexRange> split_contiguous(std::size_t n_records,
                                                   double train_fraction);

}  // namespace textclf
