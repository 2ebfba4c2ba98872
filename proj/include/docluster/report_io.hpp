#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "docluster/clustering.hpp"
#include "docluster/error.hpp"
#include "docluster/eval.hpp"
#include "docluster/ranking.hpp"

namespace docluster {

namespace io_detail {

inline std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

inline void check_csv_field(const std::string& field) {
    for (char c : field) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                        (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
        if (!ok) throw ParamError("CSV field outside [A-Za-z0-9._-]: " + field);
    }
}

}  // namespace io_detail

inline nlohmann::ordered_json cluster_set_to_json(const ClusterSet& set, int min_sup, int n_docs) {
    nlohmann::ordered_json out;
    out["threshold"] = set.threshold;
    out["min_sup"] = min_sup;
    out["n_docs"] = n_docs;
    out["levels_run"] = set.levels_run;
    out["clusters"] = nlohmann::ordered_json::array();
    for (const auto& cluster : set.clusters) {
        nlohmann::ordered_json jc;
        jc["id"] = cluster.id;
        jc["itemset"] = cluster.itemset;
        jc["documents"] = cluster.members;
        out["clusters"].push_back(std::move(jc));
    }
    out["unclustered"] = set.unclustered;
    return out;
}

/// Re-reads a cluster report; the defining itemsets come back as keyword
/// strings, matching the in-memory representation.
inline ClusterSet cluster_set_from_json(const nlohmann::json& j) {
    ClusterSet set;
    set.threshold = j.at("threshold").get<double>();
    set.levels_run = j.at("levels_run").get<int>();
    for (const auto& jc : j.at("clusters")) {
        Cluster c;
        c.id = jc.at("id").get<int>();
        c.itemset = jc.at("itemset").get<std::vector<std::string>>();
        c.members = jc.at("documents").get<std::vector<std::string>>();
        set.clusters.push_back(std::move(c));
    }
    set.unclustered = j.at("unclustered").get<std::vector<std::string>>();
    return set;
}

inline nlohmann::ordered_json rankings_to_json(const ClusterSet& set,
                                               const std::vector<std::string>& query_terms,
                                               const std::vector<std::vector<RankedDocument>>&
                                                   rankings,
                                               int min_sup, int n_docs) {
    nlohmann::ordered_json out;
    out["query"] = query_terms;
    out["threshold"] = set.threshold;
    out["min_sup"] = min_sup;
    out["n_docs"] = n_docs;
    out["clusters"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < set.clusters.size(); ++i) {
        nlohmann::ordered_json jc;
        jc["id"] = set.clusters[i].id;
        jc["itemset"] = set.clusters[i].itemset;
        jc["members"] = nlohmann::ordered_json::array();
        for (const auto& rd : rankings[i]) {
            nlohmann::ordered_json jm;
            jm["doc_id"] = rd.doc_id;
            jm["position"] = rd.position;
            jm["rank_value"] = rd.rank_value;
            jm["query_score"] = rd.query_score;
            jm["simfact"] = rd.simfact;
            jc["members"].push_back(std::move(jm));
        }
        out["clusters"].push_back(std::move(jc));
    }
    return out;
}

/// CSV with the exact header `min_sup,threshold,tfidf_clusters,apriori_clusters`.
inline std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "min_sup,threshold,tfidf_clusters,apriori_clusters\n";
    for (const auto& row : rows) {
        out += std::to_string(row.min_sup);
        out += ',';
        out += io_detail::fixed6(row.threshold);
        out += ',';
        out += std::to_string(row.tfidf_clusters);
        out += ',';
        out += std::to_string(row.apriori_clusters);
        out += '\n';
    }
    return out;
}

inline nlohmann::ordered_json eval_report_to_json(const EvalReport& report) {
    nlohmann::ordered_json out;
    out["clusters"] = nlohmann::ordered_json::array();
    for (const auto& score : report.per_cluster) {
        nlohmann::ordered_json jc;
        jc["id"] = score.cluster_id;
        jc["majority_label"] = score.majority_label;
        jc["precision"] = score.precision;
        jc["recall"] = score.recall;
        jc["f_measure"] = score.f_measure;
        out["clusters"].push_back(std::move(jc));
    }
    out["macro_average_f"] = report.macro_average_f;
    return out;
}

inline std::string eval_report_to_csv(const EvalReport& report) {
    std::string out = "cluster_id,majority_label,precision,recall,f_measure\n";
    for (const auto& score : report.per_cluster) {
        io_detail::check_csv_field(score.majority_label);
        out += std::to_string(score.cluster_id);
        out += ',';
        out += score.majority_label;
        out += ',';
        out += io_detail::fixed6(score.precision);
        out += ',';
        out += io_detail::fixed6(score.recall);
        out += ',';
        out += io_detail::fixed6(score.f_measure);
        out += '\n';
    }
    out += "MACRO,,,," + io_detail::fixed6(report.macro_average_f) + "\n";
    return out;
}

}  // namespace docluster
