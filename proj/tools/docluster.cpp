// docluster: batch document clustering, ranking and evaluation over
// plain-text corpora. Subcommands: cluster, rank, compare, eval, stem.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "docluster/corpus.hpp"
#include "docluster/error.hpp"
#include "docluster/eval.hpp"
#include "docluster/porter.hpp"
#include "docluster/ranking.hpp"
#include "docluster/report_io.hpp"

namespace {

using namespace docluster;

struct CommonOptions {
    std::string corpus_path;
    std::vector<int> min_sups;
    std::string query;
    int top_n = 0;  // 0 = all
    std::string stopword_path;
    std::string labels_path;
    std::string out_path;  // empty = stdout
    std::string format;    // per-subcommand default
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool repeatable_min_sup) {
    cmd->add_option("--corpus", opt.corpus_path, "Corpus directory of UTF-8 text files")
        ->required();
    auto* ms = cmd->add_option("--min-sup", opt.min_sups, "Minimum support");
    if (repeatable_min_sup)
        ms->required()->expected(1, -1);
    else
        ms->required()->expected(1);
    cmd->add_option("--top-n", opt.top_n, "Keep only the first N documents by id");
    cmd->add_option("--stopwords", opt.stopword_path, "Stopword file replacing the default list");
    cmd->add_option("--labels", opt.labels_path, "Labels CSV (filename,label)");
    cmd->add_option("--out", opt.out_path, "Output file (default: stdout)");
    cmd->add_option("--format", opt.format, "Output format: json or csv");
}

struct LoadedCorpus {
    std::vector<Document> docs;
    Vocabulary vocab;
    PipelineConfig config;
};

LoadedCorpus load_and_preprocess(const CommonOptions& opt) {
    LoadedCorpus lc;
    if (!opt.stopword_path.empty()) lc.config.stopwords = load_stopwords_file(opt.stopword_path);

    std::optional<std::filesystem::path> labels;
    if (!opt.labels_path.empty()) labels = opt.labels_path;
    std::vector<RawDocument> raw = load_corpus(opt.corpus_path, labels);
    if (opt.top_n > 0 && static_cast<int>(raw.size()) > opt.top_n)
        raw.resize(static_cast<std::size_t>(opt.top_n));

    lc.docs.reserve(raw.size());
    for (const auto& r : raw) lc.docs.push_back(preprocess(r, lc.config));
    if (lc.docs.empty()) throw CorpusError("corpus is empty: " + opt.corpus_path);
    lc.vocab = build_vocabulary(lc.docs);
    return lc;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write output file: " + out_path);
    out << content;
}

std::string require_format(const CommonOptions& opt, const std::string& fallback,
                           const std::vector<std::string>& allowed) {
    const std::string format = opt.format.empty() ? fallback : opt.format;
    for (const auto& a : allowed)
        if (format == a) return format;
    throw ParamError("unsupported --format for this subcommand: " + format);
}

int cmd_cluster(const CommonOptions& opt) {
    require_format(opt, "json", {"json"});
    const LoadedCorpus lc = load_and_preprocess(opt);
    const int n = static_cast<int>(lc.docs.size());
    const ThresholdConfig config{opt.min_sups.front(), n};
    const ClusterSet set = cluster(lc.docs, lc.vocab, config);
    write_output(opt.out_path, cluster_set_to_json(set, config.min_sup, n).dump(2) + "\n");
    return 0;
}

int cmd_rank(const CommonOptions& opt) {
    require_format(opt, "json", {"json"});
    const LoadedCorpus lc = load_and_preprocess(opt);
    const Query query = make_query(opt.query, lc.config);
    if (query.terms.empty()) throw ParamError("query reduced to nothing");

    const int n = static_cast<int>(lc.docs.size());
    const ThresholdConfig config{opt.min_sups.front(), n};
    const ClusterSet set = cluster(lc.docs, lc.vocab, config);
    const TfIdfTable table = build_keyword_table(lc.docs, lc.vocab, TfMode::Standard);

    std::vector<std::vector<RankedDocument>> rankings;
    rankings.reserve(set.clusters.size());
    for (const auto& c : set.clusters)
        rankings.push_back(rank_cluster(c, query, table, lc.docs));
    write_output(opt.out_path,
                 rankings_to_json(set, query.terms, rankings, config.min_sup, n).dump(2) + "\n");
    return 0;
}

int cmd_compare(const CommonOptions& opt) {
    require_format(opt, "csv", {"csv"});
    const LoadedCorpus lc = load_and_preprocess(opt);
    const std::vector<SweepRow> rows = sweep(lc.docs, lc.vocab, opt.min_sups);
    write_output(opt.out_path, sweep_to_csv(rows));
    return 0;
}

int cmd_eval(const CommonOptions& opt) {
    const std::string format = require_format(opt, "json", {"json", "csv"});
    const LoadedCorpus lc = load_and_preprocess(opt);
    const int n = static_cast<int>(lc.docs.size());
    const ThresholdConfig config{opt.min_sups.front(), n};
    const ClusterSet set = cluster(lc.docs, lc.vocab, config);

    std::map<std::string, std::string> labels;
    for (const auto& doc : lc.docs)
        if (doc.label) labels.emplace(doc.id, *doc.label);
    const EvalReport report = evaluate(set, labels);
    write_output(opt.out_path, format == "json" ? eval_report_to_json(report).dump(2) + "\n"
                                                : eval_report_to_csv(report));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tf-Idf based Apriori document clustering and ranking"};
    app.require_subcommand(1);

    CommonOptions cluster_opt, rank_opt, compare_opt, eval_opt;
    std::vector<std::string> stem_tokens;

    auto* c_cluster = app.add_subcommand("cluster", "Cluster a corpus and emit JSON");
    add_common_flags(c_cluster, cluster_opt, false);

    auto* c_rank = app.add_subcommand("rank", "Cluster, then rank members for a query");
    add_common_flags(c_rank, rank_opt, false);
    c_rank->add_option("--query", rank_opt.query, "Query text")->required();

    auto* c_compare =
        app.add_subcommand("compare", "Sweep min_sup and compare against traditional Apriori");
    add_common_flags(c_compare, compare_opt, true);

    auto* c_eval = app.add_subcommand("eval", "Score clusters against class labels");
    add_common_flags(c_eval, eval_opt, false);

    auto* c_stem = app.add_subcommand("stem", "Print the Porter stem of each token");
    c_stem->add_option("tokens", stem_tokens, "Tokens to stem")->required()->expected(1, -1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_cluster->parsed()) return cmd_cluster(cluster_opt);
        if (c_rank->parsed()) return cmd_rank(rank_opt);
        if (c_compare->parsed()) return cmd_compare(compare_opt);
        if (c_eval->parsed()) return cmd_eval(eval_opt);
        if (c_stem->parsed()) {
            for (auto token : stem_tokens) {
                for (auto& ch : token)
                    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
                std::cout << docluster::porter_stem(token) << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
