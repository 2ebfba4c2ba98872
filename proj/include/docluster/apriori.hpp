#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "docluster/error.hpp"
#include "docluster/vsm.hpp"

namespace docluster {

/// A sorted, duplicate-free set of keyword ordinals.
struct Itemset {
    std::vector<std::uint32_t> items;  // strictly ascending, non-empty

    Itemset() = default;
    explicit Itemset(std::vector<std::uint32_t> v) : items(std::move(v)) {}

    /// Builds an itemset from arbitrary input (sorts and deduplicates).
    static Itemset of(std::vector<std::uint32_t> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return Itemset(std::move(v));
    }

    std::size_t size() const { return items.size(); }
    bool operator==(const Itemset&) const = default;
    auto operator<=>(const Itemset&) const = default;
};

/// Transactions over a fixed item universe. Items are keyword ordinals and
/// each transaction is one document's keyword set, kept sorted.
struct TransactionDb {
    std::vector<std::vector<std::uint32_t>> transactions;
    std::uint32_t n_items = 0;
};

/// All frequent itemsets of one size, with their support counts.
struct FrequentLevel {
    int k = 0;
    std::map<Itemset, int> itemsets;
};

/// One transaction per document holding its keyword ordinals. Documents
/// with no keywords yield empty transactions, which are retained.
inline TransactionDb from_documents(const std::vector<Document>& docs, const Vocabulary& vocab) {
    TransactionDb db;
    db.n_items = static_cast<std::uint32_t>(vocab.size());
    db.transactions.reserve(docs.size());
    for (const auto& doc : docs) {
        std::vector<std::uint32_t> txn;
        txn.reserve(doc.counts.size());
        for (const auto& [keyword, count] : doc.counts) txn.push_back(vocab.ordinal(keyword));
        std::sort(txn.begin(), txn.end());
        db.transactions.push_back(std::move(txn));
    }
    return db;
}

/// Number of transactions containing every item of s.
inline int support(const Itemset& s, const TransactionDb& db) {
    int count = 0;
    for (const auto& txn : db.transactions)
        if (std::includes(txn.begin(), txn.end(), s.items.begin(), s.items.end())) ++count;
    return count;
}

/// Joins size-k itemsets sharing their first k-1 items, then prunes any
/// candidate with a size-k subset missing from `prev`. `prev` must be
/// sorted; the result is sorted.
inline std::vector<Itemset> join_and_prune(const std::vector<Itemset>& prev) {
    std::set<Itemset> prev_set(prev.begin(), prev.end());
    std::vector<Itemset> candidates;
    for (std::size_t i = 0; i < prev.size(); ++i) {
        for (std::size_t j = i + 1; j < prev.size(); ++j) {
            const auto& a = prev[i].items;
            const auto& b = prev[j].items;
            if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) break;
            Itemset candidate;
            candidate.items = a;
            candidate.items.push_back(b.back());

            bool all_subsets_frequent = true;
            for (std::size_t drop = 0; drop + 1 < candidate.items.size(); ++drop) {
                Itemset subset;
                subset.items.reserve(candidate.items.size() - 1);
                for (std::size_t m = 0; m < candidate.items.size(); ++m)
                    if (m != drop) subset.items.push_back(candidate.items[m]);
                if (!prev_set.count(subset)) {
                    all_subsets_frequent = false;
                    break;
                }
            }
            // The subsets dropping the two last items are the join parents.
            if (all_subsets_frequent) candidates.push_back(std::move(candidate));
        }
    }
    return candidates;
}

inline std::vector<Itemset> join_and_prune(const FrequentLevel& prev) {
    std::vector<Itemset> itemsets;
    itemsets.reserve(prev.itemsets.size());
    for (const auto& [s, sup] : prev.itemsets) itemsets.push_back(s);
    return join_and_prune(itemsets);
}

/// Level-wise Apriori: L1, L2, ... until no candidates remain.
inline std::vector<FrequentLevel> mine(const TransactionDb& db, int min_sup) {
    if (min_sup < 1) throw ParamError("min_sup must be >= 1");
    std::vector<FrequentLevel> levels;

    FrequentLevel l1;
    l1.k = 1;
    std::vector<int> item_counts(db.n_items, 0);
    for (const auto& txn : db.transactions)
        for (auto item : txn) ++item_counts[item];
    for (std::uint32_t item = 0; item < db.n_items; ++item)
        if (item_counts[item] >= min_sup)
            l1.itemsets.emplace(Itemset(std::vector<std::uint32_t>{item}), item_counts[item]);
    if (l1.itemsets.empty()) return levels;
    levels.push_back(std::move(l1));

    while (true) {
        const std::vector<Itemset> candidates = join_and_prune(levels.back());
        if (candidates.empty()) break;
        FrequentLevel next;
        next.k = levels.back().k + 1;
        for (const auto& candidate : candidates) {
            const int sup = support(candidate, db);
            if (sup >= min_sup) next.itemsets.emplace(candidate, sup);
        }
        if (next.itemsets.empty()) break;
        levels.push_back(std::move(next));
    }
    return levels;
}

/// Exhaustive-enumeration oracle: every non-empty subset of the universe,
/// counted directly over bitmask transactions. Refuses universes larger
/// than 20 items.
inline std::vector<FrequentLevel> brute_force_frequent(const TransactionDb& db, int min_sup) {
    if (min_sup < 1) throw ParamError("min_sup must be >= 1");
    if (db.n_items > 20) throw ParamError("brute force refuses universes larger than 20 items");

    std::vector<std::uint32_t> masks;
    masks.reserve(db.transactions.size());
    for (const auto& txn : db.transactions) {
        std::uint32_t mask = 0;
        for (auto item : txn) mask |= (1u << item);
        masks.push_back(mask);
    }

    std::map<int, std::map<Itemset, int>> by_size;
    const std::uint32_t limit = db.n_items == 0 ? 0 : (1u << db.n_items);
    for (std::uint32_t subset = 1; subset < limit; ++subset) {
        int sup = 0;
        for (auto mask : masks)
            if ((mask & subset) == subset) ++sup;
        if (sup < min_sup) continue;
        Itemset s;
        for (std::uint32_t item = 0; item < db.n_items; ++item)
            if (subset & (1u << item)) s.items.push_back(item);
        by_size[static_cast<int>(s.items.size())].emplace(std::move(s), sup);
    }

    std::vector<FrequentLevel> levels;
    for (auto& [k, itemsets] : by_size) {
        FrequentLevel level;
        level.k = k;
        level.itemsets = std::move(itemsets);
        levels.push_back(std::move(level));
    }
    return levels;
}

}  // namespace docluster
