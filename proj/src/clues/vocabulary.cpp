// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/clues/vocabulary.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "georeason/errors.hpp"
#include "georeason/util/files.hpp"
#include "georeason/util/hash.hpp"
#include "georeason/util/text.hpp"

namespace georeason::clues {

namespace util = georeason::util;

bool DetectionPromptVocabulary::contains(std::string_view term) const {
    return std::find(terms.begin(), terms.end(), term) != terms.end();
}

TermStoplist TermStoplist::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open stoplist: " + path.string());
    TermStoplist list;
    std::string line;
    while (std::getline(in, line)) {
        auto t = util::trim(line);
        if (t.empty() || t.front() == '#') continue;
        list.words_.insert(util::to_lower_ascii(t));
    }
    return list;
}

bool TermStoplist::contains(std::string_view lowercase_word) const {
    return words_.count(std::string(lowercase_word)) > 0;
}

DetectionPromptVocabulary build_prompt_vocabulary(std::span<const std::string> explanations,
                                                  std::span<const std::string> snippets,
                                                  std::size_t top_n, const TermStoplist& stoplist) {
    if (top_n < 1) throw Error("top_n must be >= 1");

    util::Sha256 source;
    std::map<std::string, std::size_t> counts;  // ordered: lexicographic tie-break for free
    auto consume = [&](const std::string& text) {
        source.update(text);
        source.update("\n");
        auto tokens = util::split_whitespace(
            util::strip_punctuation(util::to_lower_ascii(text)));
        for (std::string& tok : tokens) {
            if (tok.size() < 3) continue;
            if (stoplist.contains(tok)) continue;
            ++counts[std::move(tok)];
        }
    };
    for (const std::string& e : explanations) consume(e);
    for (const std::string& s : snippets) consume(s);

    if (counts.empty()) throw EmptyCorpusText("no candidate terms survive extraction");

    std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    if (ranked.size() > top_n) ranked.resize(top_n);

    DetectionPromptVocabulary vocab;
    for (auto& [term, _] : ranked) vocab.terms.push_back(std::move(term));
    auto digest = source.finish();
    vocab.source_hash = util::to_hex(digest.data(), digest.size());
    return vocab;
}

DetectionPromptVocabulary load_vocabulary(const std::filesystem::path& path) {
    std::string content = util::read_text_file(path);
    DetectionPromptVocabulary vocab;
    for (const std::string& raw_line : util::split(content, '\n')) {
        auto t = util::trim(raw_line);
        if (t.empty() || t.front() == '#') continue;
        std::string term = util::collapse_whitespace(util::to_lower_ascii(t));
        if (util::split_whitespace(term).size() > 4) {
            throw Error("vocabulary term has more than 4 words: '" + term + "'");
        }
        if (!vocab.contains(term)) vocab.terms.push_back(std::move(term));
    }
    if (vocab.terms.empty()) throw EmptyCorpusText("vocabulary file has no terms");
    vocab.source_hash = util::sha256_hex(content);
    return vocab;
}

void save_vocabulary(const DetectionPromptVocabulary& vocabulary,
                     const std::filesystem::path& path) {
    std::string out = "# detection vocabulary, one term per line\n";
    out += "# source_hash: " + vocabulary.source_hash + "\n";
    for (const std::string& term : vocabulary.terms) {
        out += term;
        out += '\n';
    }
    util::write_text_file(path, out);
}

}  // namespace georeason::clues
