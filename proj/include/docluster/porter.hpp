#pragma once

#include <array>
#include <string>
#include <string_view>

namespace docluster {

// Porter suffix-stripping stemmer. Follows the reference implementation of
// the algorithm (tartarus.org), i.e. the 1980 definition plus its three
// documented departures: words of length <= 2 are returned unchanged,
// step 2 maps -bli to -ble (instead of -abli to -able) and adds -logi to
// -log. The published vocabulary/output word lists were produced by that
// variant, and the golden test suite is checked against them.

namespace porter_detail {

inline bool is_consonant(std::string_view w, std::size_t i) {
    switch (w[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !is_consonant(w, i - 1);
        default:
            return true;
    }
}

// measure() counts vowel-consonant sequences: [C](VC){m}[V].
inline int measure(std::string_view w) {
    int m = 0;
    std::size_t i = 0;
    const std::size_t n = w.size();
    while (i < n && is_consonant(w, i)) ++i;
    while (i < n) {
        while (i < n && !is_consonant(w, i)) ++i;
        if (i == n) break;
        ++m;
        while (i < n && is_consonant(w, i)) ++i;
    }
    return m;
}

inline bool has_vowel(std::string_view w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!is_consonant(w, i)) return true;
    return false;
}

inline bool ends_double_consonant(std::string_view w) {
    const std::size_t n = w.size();
    if (n < 2 || w[n - 1] != w[n - 2]) return false;
    return is_consonant(w, n - 1);
}

// w[i-2..i] is consonant-vowel-consonant and w[i] is not 'w', 'x' or 'y'.
inline bool cvc_ending_at(std::string_view w, std::size_t i) {
    if (i < 2 || i >= w.size()) return false;
    if (!is_consonant(w, i) || is_consonant(w, i - 1) || !is_consonant(w, i - 2)) return false;
    const char c = w[i];
    return c != 'w' && c != 'x' && c != 'y';
}

inline bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline std::string_view stem_before(std::string_view w, std::string_view suffix) {
    return w.substr(0, w.size() - suffix.size());
}

// Plurals and -ed/-ing.
inline void step1ab(std::string& w) {
    if (w.back() == 's') {
        if (ends_with(w, "sses")) {
            w.resize(w.size() - 2);
        } else if (ends_with(w, "ies")) {
            w.resize(w.size() - 2);
        } else if (w[w.size() - 2] != 's') {
            w.pop_back();
        }
    }
    if (ends_with(w, "eed")) {
        if (measure(stem_before(w, "eed")) > 0) w.pop_back();
        return;
    }
    bool stripped = false;
    if (ends_with(w, "ed")) {
        std::string_view stem = stem_before(w, "ed");
        if (has_vowel(stem)) {
            w.resize(stem.size());
            stripped = true;
        }
    } else if (ends_with(w, "ing")) {
        std::string_view stem = stem_before(w, "ing");
        if (has_vowel(stem)) {
            w.resize(stem.size());
            stripped = true;
        }
    }
    if (stripped) {
        if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
            w += 'e';
        } else if (ends_double_consonant(w)) {
            const char c = w.back();
            if (c != 'l' && c != 's' && c != 'z') w.pop_back();
        } else if (measure(w) == 1 && cvc_ending_at(w, w.size() - 1)) {
            w += 'e';
        }
    }
}

// Terminal y -> i when the stem contains a vowel.
inline void step1c(std::string& w) {
    if (w.back() == 'y' && has_vowel(stem_before(w, "y"))) w.back() = 'i';
}

struct SuffixRule {
    std::string_view suffix;
    std::string_view replacement;
};

// The first matching suffix ends the step whether or not the measure
// condition allows the replacement (mirrors the reference switch).
inline void apply_rule_table(std::string& w, const SuffixRule* rules, std::size_t n_rules) {
    for (std::size_t i = 0; i < n_rules; ++i) {
        if (!ends_with(w, rules[i].suffix)) continue;
        std::string_view stem = stem_before(w, rules[i].suffix);
        if (measure(stem) > 0) {
            w.resize(stem.size());
            w += rules[i].replacement;
        }
        return;
    }
}

inline void step2(std::string& w) {
    static constexpr std::array<SuffixRule, 21> rules{{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
        {"izer", "ize"},    {"bli", "ble"},     {"alli", "al"},   {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},  {"biliti", "ble"},
        {"logi", "log"},
    }};
    apply_rule_table(w, rules.data(), rules.size());
}

inline void step3(std::string& w) {
    static constexpr std::array<SuffixRule, 7> rules{{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    }};
    apply_rule_table(w, rules.data(), rules.size());
}

inline void step4(std::string& w) {
    static constexpr std::array<std::string_view, 19> suffixes{
        "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
        "ment", "ent", "ion",  "ou",  "ism", "ate",  "iti",  "ous", "ive", "ize",
    };
    for (std::string_view suffix : suffixes) {
        if (!ends_with(w, suffix)) continue;
        std::string_view stem = stem_before(w, suffix);
        if (suffix == "ion") {
            // -ion is stripped only after s or t.
            if (stem.empty() || (stem.back() != 's' && stem.back() != 't')) continue;
        }
        if (measure(stem) > 1) w.resize(stem.size());
        return;
    }
}

inline void step5(std::string& w) {
    if (w.back() == 'e') {
        const int m = measure(w);
        if (m > 1 || (m == 1 && !cvc_ending_at(w, w.size() - 2))) w.pop_back();
    }
    if (w.size() >= 2 && w.back() == 'l' && ends_double_consonant(w) && measure(w) > 1)
        w.pop_back();
}

}  // namespace porter_detail

/// Stems a lowercase alphabetic token with the Porter algorithm.
inline std::string porter_stem(std::string token) {
    if (token.size() <= 2) return token;
    porter_detail::step1ab(token);
    porter_detail::step1c(token);
    porter_detail::step2(token);
    porter_detail::step3(token);
    porter_detail::step4(token);
    porter_detail::step5(token);
    return token;
}

}  // namespace docluster
