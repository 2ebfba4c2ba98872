#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "docluster/clustering.hpp"
#include "docluster/error.hpp"
#include "docluster/vsm.hpp"

namespace docluster {

/// A cluster member with its ranking quantities. position 1 is best.
struct RankedDocument {
    std::string doc_id;
    double simfact = 0.0;
    double query_score = 0.0;
    double rank_value = 0.0;  // query_score * simfact
    int position = 0;
};

/// Symmetric cosine matrix over the member list; the diagonal is 1 for
/// nonzero vectors and 0 for zero vectors.
inline std::vector<std::vector<double>> pairwise_cosines(
    const std::vector<std::string>& members,
    const std::map<std::string, DocumentVector>& vectors) {
    const std::size_t n = members.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& vi = vectors.at(members[i]);
        m[i][i] = cosine_similarity(vi, vi);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double c = cosine_similarity(vi, vectors.at(members[j]));
            m[i][j] = c;
            m[j][i] = c;
        }
    }
    return m;
}

namespace ranking_detail {

inline double keyword_jaccard(const Document& a, const Document& b) {
    std::size_t intersection = 0;
    auto ia = a.counts.begin();
    auto ib = b.counts.begin();
    while (ia != a.counts.end() && ib != b.counts.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            ++intersection;
            ++ia;
            ++ib;
        }
    }
    const std::size_t unions = a.counts.size() + b.counts.size() - intersection;
    if (unions == 0) return 0.0;
    return static_cast<double>(intersection) / static_cast<double>(unions);
}

}  // namespace ranking_detail

/// Similarity factor of one member: sum over the other members of
/// (keyword Jaccard overlap) * cosine. A singleton cluster scores 1 so
/// its rank degenerates to the query score.
inline double simfact(std::size_t member_index, const std::vector<std::string>& members,
                      const std::vector<std::vector<double>>& cosines,
                      const std::map<std::string, const Document*>& docs) {
    if (members.size() == 1) return 1.0;
    const Document& self = *docs.at(members[member_index]);
    double total = 0.0;
    for (std::size_t j = 0; j < members.size(); ++j) {
        if (j == member_index) continue;
        const Document& other = *docs.at(members[j]);
        total += ranking_detail::keyword_jaccard(self, other) * cosines[member_index][j];
    }
    return total;
}

/// Ranks a cluster's members by query_score * simfact, descending; ties
/// break by document id ascending. The table must be the standard-mode
/// keyword table over the full corpus.
inline std::vector<RankedDocument> rank_cluster(const Cluster& cluster, const Query& query,
                                                const TfIdfTable& table,
                                                const std::vector<Document>& corpus) {
    std::map<std::string, const Document*> docs;
    for (const auto& doc : corpus) docs.emplace(doc.id, &doc);

    std::vector<std::string> members = cluster.members;
    std::sort(members.begin(), members.end());

    std::map<std::string, DocumentVector> vectors;
    for (const auto& id : members) vectors.emplace(id, column_vector(table, id));
    const auto cosines = pairwise_cosines(members, vectors);

    std::vector<RankedDocument> ranked;
    ranked.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        RankedDocument rd;
        rd.doc_id = members[i];
        rd.simfact = simfact(i, members, cosines, docs);
        rd.query_score = query_score(query, *docs.at(members[i]), table);
        rd.rank_value = rd.query_score * rd.simfact;
        ranked.push_back(std::move(rd));
    }
    std::sort(ranked.begin(), ranked.end(), [](const RankedDocument& a, const RankedDocument& b) {
        if (a.rank_value != b.rank_value) return a.rank_value > b.rank_value;
        return a.doc_id < b.doc_id;
    });
    for (std::size_t i = 0; i < ranked.size(); ++i) ranked[i].position = static_cast<int>(i) + 1;
    return ranked;
}

}  // namespace docluster
