#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "textclf/textproc.hpp"

namespace textclf {

// Token <-> dense id bijection; ids follow ascending byte order of the
// UTF-8 tokens (which equals code-point order).
struct Vocabulary {
    std::vector<std::string> id_to_token;
    std::unordered_map<std::string, std::uint32_t> token_to_id;

    std::size_t size() const { return id_to_token.size(); }

    // -1 when absent
    std::int64_t lookup(const std::string& token) const {
        auto it = token_to_id.find(token);
        return it == token_to_id.end() ? -1 : static_cast<std::int64_t>(it->second);
    }
};

// Row-major CSR. Column indices strictly ascending within a row; zeros are
// never stored.
template <typename T>
struct CsrMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<std::size_t> row_ptr{0};  // n_rows + 1 entries
    std::vector<std::uint32_t> col_idx;
    std::vector<T> values;

    std::size_t nnz() const { return col_idx.size(); }

    std::span<const std::uint32_t> row_cols(std::size_t i) const {
        return {col_idx.data() + row_ptr[i], row_ptr[i + 1] - row_ptr[i]};
    }
    std::span<const T> row_values(std::size_t i) const {
        return {values.data() + row_ptr[i], row_ptr[i + 1] - row_ptr[i]};
    }
};

using CountMatrix = CsrMatrix<std::uint32_t>;
using WeightMatrix = CsrMatrix<double>;

struct IdfVector {
    std::vector<double> idf;
    std::size_t n_docs_fitted = 0;

    std::size_t size() const { return idf.size(); }
};

Vocabulary fit_vocabulary(const std::vector<TokenList>& token_lists);

// X[i,j] = occurrences of token j in document i; out-of-vocabulary tokens
// are dropped. Rows are computed independently and may run in parallel.
CountMatrix count_transform(const std::vector<TokenList>& token_lists,
                            const Vocabulary& vocab);

// idf[j] = ln((1 + N) / (1 + df_j)) + 1
IdfVector fit_idf(const CountMatrix& counts);

// Per row: tf = count / row token total, weight = tf * idf, then the row is
// scaled to unit Euclidean norm. Empty rows stay empty.
WeightMatrix tfidf_transform(const CountMatrix& counts, const IdfVector& idf);

namespace serial {

// Reference implementations of the row-parallel kernels; plain sequential
// loops used by the tests and the benchmark as the comparison baseline.
CountMatrix count_transform(const std::vector<TokenList>& token_lists,
                            const Vocabulary& vocab);
WeightMatrix tfidf_transform(const CountMatrix& counts, const IdfVector& idf);
std::vector<TokenList> process_texts(const std::vector<std::string>& texts,
                                     const StopList& stoplist);

}  // namespace serial

// Parallel batch form of process_text; output order matches input order.
std::vector<TokenList> process_texts(const std::vector<std::string>& texts,
                                     const StopList& stoplist);

}  // namespace textclf
