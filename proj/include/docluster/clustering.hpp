#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "docluster/apriori.hpp"
#include "docluster/error.hpp"
#include "docluster/vsm.hpp"

namespace docluster {

struct ThresholdConfig {
    int min_sup = 1;
    int n_docs = 0;
};

/// threshold = (1 / min_sup) * log10(N / min_sup)
inline double threshold(const ThresholdConfig& config) {
    if (config.min_sup < 1 || config.min_sup > config.n_docs)
        throw ParamError("min_sup must satisfy 1 <= min_sup <= n_docs");
    return (1.0 / config.min_sup) *
           std::log10(static_cast<double>(config.n_docs) / config.min_sup);
}

using WeightRow = std::map<std::string, double>;  // document id -> weight

/// tf*idf row of one candidate itemset over the given documents. For each
/// document containing every keyword of s, the itemset occurs
/// min(count(k)) times and tf = 1/occurrences; idf = log10(N/df) with N
/// and df taken over the given documents. Empty when df is 0 or idf is 0.
inline WeightRow itemset_weight_row(const Itemset& s, const std::vector<const Document*>& docs,
                                    const Vocabulary& vocab) {
    std::vector<const std::string*> keywords;
    keywords.reserve(s.items.size());
    for (auto ord : s.items) keywords.push_back(&vocab.keyword(ord));

    std::map<std::string, int> occurrences;  // doc id -> min count
    for (const Document* doc : docs) {
        int min_count = 0;
        bool contains_all = true;
        for (const std::string* keyword : keywords) {
            auto it = doc->counts.find(*keyword);
            if (it == doc->counts.end()) {
                contains_all = false;
                break;
            }
            if (min_count == 0 || it->second < min_count) min_count = it->second;
        }
        if (contains_all && !keywords.empty()) occurrences.emplace(doc->id, min_count);
    }

    WeightRow row;
    const std::size_t df = occurrences.size();
    if (df == 0 || df == docs.size()) return row;  // df == N means idf == 0
    const double w_idf = std::log10(static_cast<double>(docs.size()) / df);
    for (const auto& [doc_id, occ] : occurrences) row.emplace(doc_id, (1.0 / occ) * w_idf);
    return row;
}

inline WeightRow itemset_weight_row(const Itemset& s, const std::vector<Document>& docs,
                                    const Vocabulary& vocab) {
    std::vector<const Document*> ptrs;
    ptrs.reserve(docs.size());
    for (const auto& doc : docs) ptrs.push_back(&doc);
    return itemset_weight_row(s, ptrs, vocab);
}

/// A row survives when it is non-empty and its smallest stored (positive)
/// entry does not exceed the threshold.
inline bool row_survives(const WeightRow& row, double threshold) {
    if (row.empty()) return false;
    double min_entry = row.begin()->second;
    for (const auto& [doc_id, w] : row) min_entry = std::min(min_entry, w);
    return min_entry <= threshold;
}

using ItemsetTable = WeightTable<Itemset>;

/// One level of the candidate-elimination loop.
struct LevelState {
    int n = 0;                        // itemset size at this level
    std::vector<Itemset> survivors;   // rows that passed row_survives
    std::set<std::string> alive_docs;
    ItemsetTable table;               // surviving rows over alive documents
};

/// Documents whose column holds no stored entry in (0, threshold] among
/// the surviving rows; they are eliminated from later levels.
inline std::set<std::string> eliminate_columns(const LevelState& level, double threshold) {
    std::set<std::string> dropped;
    for (const auto& doc_id : level.alive_docs) {
        bool keep = false;
        for (const auto& s : level.survivors) {
            const double w = level.table.entry(s, doc_id);
            if (w > 0.0 && w <= threshold) {
                keep = true;
                break;
            }
        }
        if (!keep) dropped.insert(doc_id);
    }
    return dropped;
}

struct Cluster {
    int id = 0;                         // 1-based, in defining-itemset order
    std::vector<std::string> itemset;   // defining keywords, sorted
    std::vector<std::string> members;   // document ids, sorted
};

struct ClusterSet {
    std::vector<Cluster> clusters;
    std::vector<std::string> unclustered;  // document ids, sorted
    int levels_run = 0;                    // deepest level with survivors
    double threshold = 0.0;
};

namespace clustering_detail {

inline std::vector<const Document*> alive_documents(const std::vector<Document>& docs,
                                                    const std::set<std::string>& alive) {
    std::vector<const Document*> out;
    out.reserve(alive.size());
    for (const auto& doc : docs)
        if (alive.count(doc.id)) out.push_back(&doc);
    return out;
}

}  // namespace clustering_detail

/// The level-wise tf-idf clustering. Level 1 keeps keywords whose
/// uniform-mode tf*idf row survives the Eq.-style threshold; levels n >= 2
/// join the previous survivors Apriori-style, rebuild itemset rows over the
/// still-alive documents (df/idf recomputed over those documents, threshold
/// fixed from the original corpus size), drop failing rows, then eliminate
/// documents whose columns hold no entry within the threshold. Clusters are
/// the surviving itemsets of the deepest level reached (n >= 2 required),
/// deduplicated by member set.
inline ClusterSet cluster(const std::vector<Document>& docs, const Vocabulary& vocab,
                          const ThresholdConfig& config) {
    if (docs.empty()) throw CorpusError("cannot cluster an empty corpus");
    if (config.n_docs != static_cast<int>(docs.size()))
        throw ParamError("config.n_docs must equal the corpus size");
    const double thr = threshold(config);

    ClusterSet result;
    result.threshold = thr;

    // Level 1: keywords via the uniform-mode keyword table.
    const TfIdfTable keyword_table = build_keyword_table(docs, vocab, TfMode::Uniform);
    std::vector<Itemset> survivors;
    for (std::uint32_t ord = 0; ord < vocab.size(); ++ord) {
        const auto& row = keyword_table.row(vocab.keyword(ord));
        if (row_survives(row, thr)) survivors.push_back(Itemset(std::vector<std::uint32_t>{ord}));
    }

    std::set<std::string> alive;
    for (const auto& doc : docs) alive.insert(doc.id);

    result.levels_run = survivors.empty() ? 0 : 1;
    std::vector<Itemset> final_survivors;
    int final_level = 1;

    std::vector<Itemset> current = survivors;
    for (int n = 2; !current.empty(); ++n) {
        const std::vector<Itemset> candidates = join_and_prune(current);
        if (candidates.empty()) break;

        const auto alive_docs = clustering_detail::alive_documents(docs, alive);
        LevelState level;
        level.n = n;
        level.alive_docs = alive;
        std::vector<std::string> col_keys(alive.begin(), alive.end());
        std::map<Itemset, WeightRow> rows;
        for (const auto& candidate : candidates) {
            WeightRow row = itemset_weight_row(candidate, alive_docs, vocab);
            if (row_survives(row, thr)) rows.emplace(candidate, std::move(row));
        }
        if (rows.empty()) break;

        std::vector<Itemset> row_keys;
        row_keys.reserve(rows.size());
        for (const auto& [s, row] : rows) row_keys.push_back(s);
        level.survivors = row_keys;
        level.table = ItemsetTable(std::move(row_keys), std::move(col_keys), TfMode::Itemset);
        for (const auto& [s, row] : rows)
            for (const auto& [doc_id, w] : row) level.table.set(s, doc_id, w);

        const std::set<std::string> dropped = eliminate_columns(level, thr);
        for (const auto& doc_id : dropped) alive.erase(doc_id);

        current = level.survivors;
        final_survivors = level.survivors;
        final_level = n;
        result.levels_run = n;
        if (alive.empty()) break;
    }

    std::set<std::string> clustered;
    if (final_level >= 2) {
        const auto alive_docs = clustering_detail::alive_documents(docs, alive);
        std::set<std::vector<std::string>> seen_member_sets;
        for (const auto& s : final_survivors) {  // sorted: smallest itemset wins dedup
            std::vector<std::string> keywords;
            keywords.reserve(s.items.size());
            for (auto ord : s.items) keywords.push_back(vocab.keyword(ord));

            std::vector<std::string> members;
            for (const Document* doc : alive_docs) {
                bool contains_all = true;
                for (const auto& keyword : keywords)
                    if (!doc->counts.count(keyword)) {
                        contains_all = false;
                        break;
                    }
                if (contains_all) members.push_back(doc->id);
            }
            std::sort(members.begin(), members.end());
            if (members.empty() || !seen_member_sets.insert(members).second) continue;
            Cluster c;
            c.itemset = std::move(keywords);
            c.members = std::move(members);
            result.clusters.push_back(std::move(c));
        }
        for (std::size_t i = 0; i < result.clusters.size(); ++i) {
            result.clusters[i].id = static_cast<int>(i) + 1;
            for (const auto& m : result.clusters[i].members) clustered.insert(m);
        }
    }
    for (const auto& doc : docs)
        if (!clustered.count(doc.id)) result.unclustered.push_back(doc.id);
    std::sort(result.unclustered.begin(), result.unclustered.end());
    return result;
}

}  // namespace docluster
