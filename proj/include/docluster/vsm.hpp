#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "docluster/corpus.hpp"
#include "docluster/error.hpp"

namespace docluster {

/// Corpus keyword dimension: lexicographically ordered keywords with
/// document frequencies.
class Vocabulary {
public:
    const std::vector<std::string>& keywords() const { return keywords_; }
    std::size_t size() const { return keywords_.size(); }
    bool contains(const std::string& keyword) const { return index_.count(keyword) != 0; }

    std::uint32_t ordinal(const std::string& keyword) const {
        auto it = index_.find(keyword);
        if (it == index_.end()) throw LookupError("keyword not in vocabulary: " + keyword);
        return it->second;
    }
    const std::string& keyword(std::uint32_t ord) const { return keywords_.at(ord); }

    int df(const std::string& keyword) const { return df_.at(ordinal(keyword)); }
    int df(std::uint32_t ord) const { return df_.at(ord); }

private:
    std::vector<std::string> keywords_;
    std::vector<int> df_;
    std::unordered_map<std::string, std::uint32_t> index_;

    friend Vocabulary build_vocabulary(const std::vector<Document>&);
};

inline Vocabulary build_vocabulary(const std::vector<Document>& docs) {
    if (docs.empty()) throw CorpusError("cannot build a vocabulary from an empty corpus");
    std::map<std::string, int> df;  // keyword -> containing-document count
    for (const auto& doc : docs)
        for (const auto& [keyword, count] : doc.counts) ++df[keyword];
    Vocabulary vocab;
    vocab.keywords_.reserve(df.size());
    vocab.df_.reserve(df.size());
    for (const auto& [keyword, n] : df) {
        vocab.index_.emplace(keyword, static_cast<std::uint32_t>(vocab.keywords_.size()));
        vocab.keywords_.push_back(keyword);
        vocab.df_.push_back(n);
    }
    return vocab;
}

/// idf = log10(N / df); 0 when the keyword is everywhere.
inline double idf(const std::string& keyword, const Vocabulary& vocab, std::size_t n_docs) {
    return std::log10(static_cast<double>(n_docs) / vocab.df(keyword));
}

enum class TfMode { Standard, Uniform, Itemset };

/// Term frequency of a keyword the document contains.
///   Uniform:  1 / distinct keywords in the document
///   Standard: occurrences / total kept tokens
inline double tf(const std::string& keyword, const Document& doc, TfMode mode) {
    auto it = doc.counts.find(keyword);
    if (it == doc.counts.end())
        throw LookupError("document " + doc.id + " does not contain keyword: " + keyword);
    switch (mode) {
        case TfMode::Uniform:
            return 1.0 / doc.distinct_keywords;
        case TfMode::Standard:
            return static_cast<double>(it->second) / doc.total_tokens;
        case TfMode::Itemset:
            break;
    }
    throw ParamError("tf() supports Standard and Uniform modes only");
}

/// Sparse rows-by-documents weight table; absent entries are zero, stored
/// entries are strictly positive.
template <typename RowKey>
class WeightTable {
public:
    using Row = std::map<std::string, double>;

    WeightTable() : mode_(TfMode::Itemset) {}
    WeightTable(std::vector<RowKey> row_keys, std::vector<std::string> col_keys, TfMode mode)
        : row_keys_(std::move(row_keys)), col_keys_(std::move(col_keys)), mode_(mode) {}

    TfMode mode() const { return mode_; }
    const std::vector<RowKey>& row_keys() const { return row_keys_; }
    const std::vector<std::string>& col_keys() const { return col_keys_; }

    void set(const RowKey& row, const std::string& col, double weight) {
        if (!(weight > 0.0)) throw ParamError("table entries must be positive");
        rows_[row][col] = weight;
    }

    double entry(const RowKey& row, const std::string& col) const {
        auto rit = rows_.find(row);
        if (rit == rows_.end()) return 0.0;
        auto cit = rit->second.find(col);
        return cit == rit->second.end() ? 0.0 : cit->second;
    }

    const Row& row(const RowKey& key) const {
        static const Row empty;
        auto it = rows_.find(key);
        return it == rows_.end() ? empty : it->second;
    }

    std::size_t entry_count() const {
        std::size_t n = 0;
        for (const auto& [key, row] : rows_) n += row.size();
        return n;
    }

private:
    std::vector<RowKey> row_keys_;
    std::vector<std::string> col_keys_;
    TfMode mode_;
    std::map<RowKey, Row> rows_;
};

using TfIdfTable = WeightTable<std::string>;

/// tf*idf entry per (keyword, document) pair with the keyword present and
/// idf > 0; keywords occurring in every document produce no entries.
inline TfIdfTable build_keyword_table(const std::vector<Document>& docs, const Vocabulary& vocab,
                                      TfMode mode) {
    if (docs.empty()) throw CorpusError("cannot build a table over an empty corpus");
    std::vector<std::string> col_keys;
    col_keys.reserve(docs.size());
    for (const auto& doc : docs) col_keys.push_back(doc.id);

    TfIdfTable table(vocab.keywords(), std::move(col_keys), mode);
    const std::size_t n = docs.size();
    for (const auto& doc : docs) {
        for (const auto& [keyword, count] : doc.counts) {
            const double w_idf = idf(keyword, vocab, n);
            if (w_idf <= 0.0) continue;
            table.set(keyword, doc.id, tf(keyword, doc, mode) * w_idf);
        }
    }
    return table;
}

/// One document's column of a keyword table.
struct DocumentVector {
    std::string doc_id;
    std::map<std::string, double> weights;
};

inline DocumentVector column_vector(const TfIdfTable& table, const std::string& doc_id) {
    DocumentVector vec;
    vec.doc_id = doc_id;
    for (const auto& keyword : table.row_keys()) {
        const double w = table.entry(keyword, doc_id);
        if (w > 0.0) vec.weights.emplace(keyword, w);
    }
    return vec;
}

inline double cosine_similarity(const std::map<std::string, double>& a,
                                const std::map<std::string, double>& b) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (const auto& [k, w] : a) na += w * w;
    for (const auto& [k, w] : b) nb += w * w;
    if (na == 0.0 || nb == 0.0) return 0.0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            dot += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    const double value = dot / (std::sqrt(na) * std::sqrt(nb));
    return value < 0.0 ? 0.0 : (value > 1.0 ? 1.0 : value);
}

inline double cosine_similarity(const DocumentVector& a, const DocumentVector& b) {
    return cosine_similarity(a.weights, b.weights);
}

/// A preprocessed user query.
struct Query {
    std::vector<std::string> terms;
};

/// Preprocesses query text with the corpus pipeline configuration.
inline Query make_query(const std::string& text, const PipelineConfig& config) {
    return Query{preprocess_tokens(text, config)};
}

/// Sum of the document's table entries over the query terms; absent terms
/// contribute zero and repeated terms contribute once per repetition.
inline double query_score(const Query& query, const Document& doc, const TfIdfTable& table) {
    double score = 0.0;
    for (const auto& term : query.terms) score += table.entry(term, doc.id);
    return score;
}

}  // namespace docluster
