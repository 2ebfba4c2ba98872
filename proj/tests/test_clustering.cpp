#include <catch2/catch.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "docluster/clustering.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace docluster;
using testutil::make_doc;

namespace {

std::vector<Document> fixture_docs() {
    return {make_doc("D1", {{"appl", 1}, {"banana", 1}}),
            make_doc("D2", {{"appl", 1}, {"banana", 1}}),
            make_doc("D3", {{"cherri", 1}})};
}

bool matches_oracle(const ClusterSet& got, const testutil::OracleClusterResult& want) {
    if (got.threshold != want.threshold) return false;
    if (got.levels_run != want.levels_run) return false;
    if (got.unclustered != want.unclustered) return false;
    if (got.clusters.size() != want.clusters.size()) return false;
    for (std::size_t i = 0; i < got.clusters.size(); ++i) {
        if (got.clusters[i].itemset != want.clusters[i].itemset) return false;
        if (got.clusters[i].members != want.clusters[i].members) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("threshold implements (1/min_sup) * log10(N/min_sup)") {
    CHECK(threshold({10, 400}) == Approx(0.160206).margin(1e-6));
    CHECK(threshold({1, 10}) == Approx(1.0).margin(1e-12));
    CHECK(threshold({10, 10}) == 0.0);
    CHECK_THROWS_AS(threshold({0, 10}), ParamError);
    CHECK_THROWS_AS(threshold({11, 10}), ParamError);
}

TEST_CASE("threshold is strictly decreasing in min_sup") {
    for (int n : {10, 400}) {
        double prev = threshold({1, n});
        for (int ms = 2; ms <= n; ++ms) {
            const double cur = threshold({ms, n});
            CHECK(cur < prev);
            prev = cur;
        }
        CHECK(prev == 0.0);
    }
}

TEST_CASE("itemset_weight_row builds min-count tf against recomputed idf") {
    const auto docs = fixture_docs();
    const auto vocab = build_vocabulary(docs);

    SECTION("itemset present everywhere has an empty row") {
        const auto docs2 = std::vector<Document>{make_doc("a", {{"k", 2}}),
                                                 make_doc("b", {{"k", 5}})};
        const auto vocab2 = build_vocabulary(docs2);
        CHECK(itemset_weight_row(Itemset::of({0}), docs2, vocab2).empty());
    }
    SECTION("fixture pair row") {
        const Itemset pair = Itemset::of({vocab.ordinal("appl"), vocab.ordinal("banana")});
        const auto row = itemset_weight_row(pair, docs, vocab);
        REQUIRE(row.size() == 2);
        CHECK(row.at("D1") == Approx(std::log10(1.5)).margin(1e-9));  // ~0.176091
        CHECK(row.at("D2") == Approx(std::log10(1.5)).margin(1e-9));
    }
    SECTION("df zero gives an empty row") {
        const Itemset impossible =
            Itemset::of({vocab.ordinal("appl"), vocab.ordinal("cherri")});
        CHECK(itemset_weight_row(impossible, docs, vocab).empty());
    }
}

TEST_CASE("row_survives needs a positive minimum within the threshold") {
    CHECK_FALSE(row_survives({}, 0.48));
    CHECK(row_survives({{"D1", 0.17}, {"D2", 0.9}}, 0.48));
    CHECK_FALSE(row_survives({{"D1", 0.6}}, 0.48));
}

TEST_CASE("eliminate_columns drops documents without a qualifying entry") {
    const auto docs = fixture_docs();
    const auto vocab = build_vocabulary(docs);
    const double thr = threshold({1, 3});

    LevelState level;
    level.n = 2;
    level.alive_docs = {"D1", "D2", "D3"};
    const Itemset pair = Itemset::of({vocab.ordinal("appl"), vocab.ordinal("banana")});
    level.survivors = {pair};
    level.table = ItemsetTable({pair}, {"D1", "D2", "D3"}, TfMode::Itemset);
    for (const auto& [doc_id, w] : itemset_weight_row(pair, docs, vocab))
        level.table.set(pair, doc_id, w);

    SECTION("document with no entry is dropped") {
        CHECK(eliminate_columns(level, thr) == std::set<std::string>{"D3"});
    }
    SECTION("one in-threshold entry keeps the column") {
        const auto dropped = eliminate_columns(level, thr);
        CHECK(dropped.count("D1") == 0);
        CHECK(dropped.count("D2") == 0);
    }
    SECTION("without surviving rows every column is dropped") {
        LevelState bare;
        bare.n = 2;
        bare.alive_docs = {"D1", "D2"};
        CHECK(eliminate_columns(bare, thr) == std::set<std::string>{"D1", "D2"});
    }
}

TEST_CASE("cluster reproduces the fixture walkthrough") {
    const auto docs = fixture_docs();
    const auto vocab = build_vocabulary(docs);
    const ClusterSet set = cluster(docs, vocab, {1, 3});

    CHECK(set.threshold == Approx(std::log10(3.0)).margin(1e-9));
    CHECK(set.levels_run == 2);
    REQUIRE(set.clusters.size() == 1);
    CHECK(set.clusters[0].id == 1);
    CHECK(set.clusters[0].itemset == std::vector<std::string>{"appl", "banana"});
    CHECK(set.clusters[0].members == std::vector<std::string>{"D1", "D2"});
    CHECK(set.unclustered == std::vector<std::string>{"D3"});
}

TEST_CASE("cluster degenerate cases") {
    SECTION("keyword in every document leaves everything unclustered") {
        const std::vector<Document> docs{make_doc("a", {{"k", 1}}), make_doc("b", {{"k", 2}})};
        const ClusterSet set = cluster(docs, build_vocabulary(docs), {1, 2});
        CHECK(set.clusters.empty());
        CHECK(set.levels_run == 0);
        CHECK(set.unclustered == std::vector<std::string>{"a", "b"});
    }
    SECTION("min_sup equal to N zeroes the threshold and all clusters") {
        const auto docs = fixture_docs();
        const ClusterSet set = cluster(docs, build_vocabulary(docs), {3, 3});
        CHECK(set.threshold == 0.0);
        CHECK(set.clusters.empty());
        CHECK(set.unclustered.size() == 3);
    }
    SECTION("empty corpus is an error") {
        Vocabulary vocab;
        CHECK_THROWS_AS(cluster({}, vocab, {1, 0}), Error);
    }
    SECTION("config size mismatch is rejected") {
        const auto docs = fixture_docs();
        CHECK_THROWS_AS(cluster(docs, build_vocabulary(docs), {1, 5}), ParamError);
    }
}

TEST_CASE("cluster equals the exhaustive oracle on random corpora") {
    testutil::Rng rng(20240501);
    for (int trial = 0; trial < 50; ++trial) {
        const auto docs = testutil::random_corpus(rng);
        const int min_sup = rng.between(1, static_cast<int>(docs.size()));
        const auto got = cluster(docs, build_vocabulary(docs), {min_sup, (int)docs.size()});
        const auto want = testutil::oracle_cluster(docs, min_sup);
        INFO("trial " << trial << ", docs " << docs.size() << ", min_sup " << min_sup);
        CHECK(matches_oracle(got, want));
    }
}

TEST_CASE("cluster structural invariants hold on random corpora") {
    testutil::Rng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const auto docs = testutil::random_corpus(rng);
        const int min_sup = rng.between(1, static_cast<int>(docs.size()));
        const auto set = cluster(docs, build_vocabulary(docs), {min_sup, (int)docs.size()});

        std::set<std::vector<std::string>> member_sets;
        for (const auto& c : set.clusters) {
            CHECK_FALSE(c.members.empty());
            CHECK(member_sets.insert(c.members).second);  // pairwise distinct
            for (const auto& id : c.members) {
                const auto doc = std::find_if(docs.begin(), docs.end(),
                                              [&](const Document& d) { return d.id == id; });
                REQUIRE(doc != docs.end());
                for (const auto& kw : c.itemset) CHECK(doc->counts.count(kw) == 1);
            }
        }
    }
}

TEST_CASE("cluster output is independent of document order") {
    testutil::Rng rng(777);
    for (int trial = 0; trial < 15; ++trial) {
        auto docs = testutil::random_corpus(rng, 6, 6);
        const int min_sup = rng.between(1, static_cast<int>(docs.size()));
        const auto base = cluster(docs, build_vocabulary(docs), {min_sup, (int)docs.size()});

        std::mt19937 shuffler(trial);
        std::shuffle(docs.begin(), docs.end(), shuffler);
        const auto shuffled = cluster(docs, build_vocabulary(docs), {min_sup, (int)docs.size()});

        REQUIRE(base.clusters.size() == shuffled.clusters.size());
        for (std::size_t i = 0; i < base.clusters.size(); ++i) {
            CHECK(base.clusters[i].itemset == shuffled.clusters[i].itemset);
            CHECK(base.clusters[i].members == shuffled.clusters[i].members);
        }
        CHECK(base.unclustered == shuffled.unclustered);
        CHECK(base.levels_run == shuffled.levels_run);
    }
}
