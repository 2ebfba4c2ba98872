#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "docluster/apriori.hpp"
#include "docluster/clustering.hpp"
#include "docluster/error.hpp"

namespace docluster {

/// 2PR / (P + R); 0 when both are 0.
inline double f_measure(double precision, double recall) {
    if (precision < 0.0 || precision > 1.0 || recall < 0.0 || recall > 1.0)
        throw ParamError("precision and recall must lie in [0, 1]");
    const double denom = precision + recall;
    if (denom == 0.0) return 0.0;
    return 2.0 * precision * recall / denom;
}

struct ClusterScore {
    int cluster_id = 0;
    std::string majority_label;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
};

struct EvalReport {
    std::vector<ClusterScore> per_cluster;
    double macro_average_f = 0.0;  // unweighted mean over clusters
};

/// Scores one cluster against its majority label: precision over the
/// cluster, recall over all corpus documents carrying that label.
inline ClusterScore score_cluster(const std::vector<std::string>& members,
                                  const std::map<std::string, std::string>& labels) {
    if (members.empty()) throw ParamError("cannot score an empty cluster");
    std::map<std::string, int> tally;
    for (const auto& id : members) {
        auto it = labels.find(id);
        if (it == labels.end()) throw Error("document has no label: " + id);
        ++tally[it->second];
    }
    // Majority label; ties go to the lexicographically smallest.
    std::string majority = tally.begin()->first;
    int best = tally.begin()->second;
    for (const auto& [label, n] : tally) {
        if (n > best) {
            majority = label;
            best = n;
        }
    }
    int corpus_with_label = 0;
    for (const auto& [id, label] : labels)
        if (label == majority) ++corpus_with_label;

    ClusterScore score;
    score.majority_label = majority;
    score.precision = static_cast<double>(best) / static_cast<double>(members.size());
    score.recall = static_cast<double>(best) / static_cast<double>(corpus_with_label);
    score.f_measure = f_measure(score.precision, score.recall);
    return score;
}

inline EvalReport evaluate(const ClusterSet& clusters,
                           const std::map<std::string, std::string>& labels) {
    EvalReport report;
    double sum_f = 0.0;
    for (const auto& cluster : clusters.clusters) {
        ClusterScore score = score_cluster(cluster.members, labels);
        score.cluster_id = cluster.id;
        sum_f += score.f_measure;
        report.per_cluster.push_back(std::move(score));
    }
    report.macro_average_f =
        report.per_cluster.empty() ? 0.0 : sum_f / static_cast<double>(report.per_cluster.size());
    return report;
}

struct SweepRow {
    int min_sup = 0;
    double threshold = 0.0;
    int tfidf_clusters = 0;
    int apriori_clusters = 0;
};

namespace eval_detail {

/// Baseline cluster count: itemsets of the deepest mined level, mapped to
/// their supporting document sets, deduplicated.
inline int apriori_cluster_count(const std::vector<Document>& docs, const TransactionDb& db,
                                 int min_sup) {
    const auto levels = mine(db, min_sup);
    if (levels.empty()) return 0;
    const FrequentLevel& deepest = levels.back();
    std::set<std::vector<std::string>> member_sets;
    for (const auto& [s, sup] : deepest.itemsets) {
        std::vector<std::string> members;
        for (std::size_t t = 0; t < db.transactions.size(); ++t) {
            const auto& txn = db.transactions[t];
            if (std::includes(txn.begin(), txn.end(), s.items.begin(), s.items.end()))
                members.push_back(docs[t].id);
        }
        std::sort(members.begin(), members.end());
        member_sets.insert(std::move(members));
    }
    return static_cast<int>(member_sets.size());
}

}  // namespace eval_detail

/// Runs both clusterers once per min_sup and tabulates the counts
/// (the Tf-Idf-Apriori vs traditional-Apriori comparison).
inline std::vector<SweepRow> sweep(const std::vector<Document>& docs, const Vocabulary& vocab,
                                   const std::vector<int>& min_sups) {
    const int n = static_cast<int>(docs.size());
    const TransactionDb db = from_documents(docs, vocab);
    std::vector<SweepRow> rows;
    rows.reserve(min_sups.size());
    for (int min_sup : min_sups) {
        if (min_sup < 1 || min_sup > n)
            throw ParamError("sweep min_sup values must satisfy 1 <= min_sup <= n_docs");
        SweepRow row;
        row.min_sup = min_sup;
        const ThresholdConfig config{min_sup, n};
        row.threshold = threshold(config);
        row.tfidf_clusters = static_cast<int>(cluster(docs, vocab, config).clusters.size());
        row.apriori_clusters = eval_detail::apriori_cluster_count(docs, db, min_sup);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace docluster
