#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "docluster/error.hpp"
#include "docluster/porter.hpp"
#include "docluster/stopwords.hpp"

namespace docluster {

/// One corpus file before preprocessing.
struct RawDocument {
    std::string id;                    // filename within the corpus directory
    std::optional<std::string> label;  // class label, when known
    std::string body;                  // UTF-8 text
};

/// One preprocessed document: keyword occurrence counts.
struct Document {
    std::string id;
    std::optional<std::string> label;
    std::map<std::string, int> counts;  // keyword -> occurrences, all >= 1
    int total_tokens = 0;               // sum of counts
    int distinct_keywords = 0;          // counts.size()
};

/// Predicate deciding whether a (pre-stem) token is kept as a keyword.
using KeywordFilter = std::function<bool(const std::string&)>;

struct PipelineConfig {
    std::set<std::string> stopwords = smart_stopwords();  // lowercase entries
    KeywordFilter keyword_filter;                         // pass-through when empty
    int min_token_length = 2;
    bool stemming_enabled = true;
};

inline bool is_valid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        std::size_t extra;
        unsigned int cp;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            extra = 1;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + extra >= s.size()) return false;
        for (std::size_t k = 1; k <= extra; ++k) {
            const unsigned char cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (extra == 1 && cp < 0x80) return false;     // overlong
        if (extra == 2 && cp < 0x800) return false;    // overlong
        if (extra == 3 && cp < 0x10000) return false;  // overlong
        if (cp >= 0xD800 && cp <= 0xDFFF) return false;  // surrogate
        if (cp > 0x10FFFF) return false;
        i += extra + 1;
    }
    return true;
}

/// Lowercased maximal runs of ASCII letters; anything else separates.
/// Runs shorter than config.min_token_length are dropped.
inline std::vector<std::string> tokenize(std::string_view body, const PipelineConfig& config) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (static_cast<int>(current.size()) >= config.min_token_length)
            tokens.push_back(current);
        current.clear();
    };
    for (char ch : body) {
        const unsigned char u = static_cast<unsigned char>(ch);
        if ((u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z')) {
            current.push_back(static_cast<char>(std::tolower(u)));
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

/// Tokens surviving stopword removal and the keyword filter, before stemming.
inline std::vector<std::string> kept_tokens(std::string_view body, const PipelineConfig& config) {
    std::vector<std::string> kept;
    for (auto& tok : tokenize(body, config)) {
        if (config.stopwords.count(tok)) continue;
        if (config.keyword_filter && !config.keyword_filter(tok)) continue;
        kept.push_back(std::move(tok));
    }
    return kept;
}

/// Full keyword stream: kept tokens, stemmed when enabled.
inline std::vector<std::string> preprocess_tokens(std::string_view body,
                                                  const PipelineConfig& config) {
    std::vector<std::string> out = kept_tokens(body, config);
    if (config.stemming_enabled)
        for (auto& tok : out) tok = porter_stem(std::move(tok));
    return out;
}

inline Document preprocess(const RawDocument& raw, const PipelineConfig& config) {
    Document doc;
    doc.id = raw.id;
    doc.label = raw.label;
    for (auto& keyword : preprocess_tokens(raw.body, config)) {
        ++doc.counts[keyword];
        ++doc.total_tokens;
    }
    doc.distinct_keywords = static_cast<int>(doc.counts.size());
    return doc;
}

/// Labels file: CSV with two columns `filename,label`, no header.
inline std::map<std::string, std::string> load_labels_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CorpusError("labels file not readable: " + path.string());
    std::map<std::string, std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw CorpusError("labels file line is not `filename,label`: " + line);
        labels[line.substr(0, comma)] = line.substr(comma + 1);
    }
    return labels;
}

/// Stopword file: one lowercase word per line, `#` lines are comments.
inline std::set<std::string> load_stopwords_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CorpusError("stopword file not readable: " + path.string());
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        for (auto& ch : line) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        words.insert(line);
    }
    return words;
}

namespace corpus_detail {

inline std::optional<std::string> label_from_filename(const std::string& id) {
    const std::size_t dot = id.find('.');
    if (dot == std::string::npos || dot == 0) return std::nullopt;
    return id.substr(0, dot);
}

}  // namespace corpus_detail

/// Loads every regular file of `dir` as one RawDocument, id = filename,
/// sorted by id. Labels come from the labels file when one is given and
/// lists the filename, otherwise from the filename prefix before the
/// first '.' (Classic-dataset naming), otherwise stay absent.
inline std::vector<RawDocument> load_corpus(
    const std::filesystem::path& dir,
    const std::optional<std::filesystem::path>& labels_path = std::nullopt) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec) || ec)
        throw CorpusError("corpus directory not readable: " + dir.string());

    std::map<std::string, std::string> labels;
    if (labels_path) labels = load_labels_file(*labels_path);

    std::vector<RawDocument> docs;
    std::set<std::string> seen;
    try {
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (!entry.is_regular_file()) continue;
            RawDocument raw;
            raw.id = entry.path().filename().string();
            if (!seen.insert(raw.id).second)
                throw CorpusError("duplicate document id: " + raw.id);

            std::ifstream in(entry.path(), std::ios::binary);
            if (!in) throw CorpusError("file not readable: " + entry.path().string());
            std::ostringstream buf;
            buf << in.rdbuf();
            raw.body = buf.str();
            if (!is_valid_utf8(raw.body))
                throw DecodeError("file is not valid UTF-8: " + raw.id);

            if (auto it = labels.find(raw.id); it != labels.end())
                raw.label = it->second;
            else
                raw.label = corpus_detail::label_from_filename(raw.id);
            docs.push_back(std::move(raw));
        }
    } catch (const fs::filesystem_error& e) {
        throw CorpusError(std::string("corpus directory not readable: ") + e.what());
    }
    std::sort(docs.begin(), docs.end(),
              [](const RawDocument& a, const RawDocument& b) { return a.id < b.id; });
    return docs;
}

}  // namespace docluster
