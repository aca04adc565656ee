// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/corpus/filters.hpp"

#include <fstream>

#include "georeason/errors.hpp"
#include "georeason/util/text.hpp"

namespace georeason::corpus {

namespace util = georeason::util;

namespace {

std::vector<std::string> read_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open list file: " + path.string());
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto t = util::trim(line);
        if (t.empty() || t.front() == '#') continue;
        out.emplace_back(util::to_lower_ascii(t));
    }
    return out;
}

}  // namespace

EnglishWordList EnglishWordList::load(const std::filesystem::path& path) {
    EnglishWordList list;
    for (const std::string& word : read_list_file(path)) {
        list.words_.insert(word);
        list.words_.insert(word + "s");
        list.words_.insert(word + "es");
        list.words_.insert(word + "ed");
        list.words_.insert(word + "ing");
        if (word.size() > 2 && word.back() == 'e') {
            std::string stem = word.substr(0, word.size() - 1);
            list.words_.insert(word + "d");
            list.words_.insert(stem + "ing");
        }
    }
    return list;
}

bool EnglishWordList::contains(std::string_view lowercase_word) const {
    return words_.count(std::string(lowercase_word)) > 0;
}

PhraseBlacklist PhraseBlacklist::load(const std::filesystem::path& path) {
    PhraseBlacklist bl;
    bl.phrases_ = read_list_file(path);
    return bl;
}

bool PhraseBlacklist::matches(std::string_view text) const {
    for (const std::string& phrase : phrases_) {
        if (util::icontains(text, phrase)) return true;
    }
    return false;
}

bool ExplanationFilters::is_english(std::string_view text) const {
    if (english_predicate) return english_predicate(text);
    if (util::ascii_fraction(text) < min_ascii_fraction) return false;
    auto tokens = util::split_whitespace(util::strip_punctuation(util::to_lower_ascii(text)));
    if (tokens.empty()) return false;
    std::size_t known = 0;
    for (const std::string& tok : tokens) {
        if (words.contains(tok)) ++known;
    }
    return static_cast<double>(known) >= min_known_token_fraction * tokens.size();
}

bool ExplanationFilters::is_non_reasoning(std::string_view text) const {
    if (non_reasoning_predicate) return non_reasoning_predicate(text);
    return blacklist.matches(text);
}

ExplanationFilters ExplanationFilters::load(const std::filesystem::path& data_dir) {
    ExplanationFilters f;
    f.words = EnglishWordList::load(data_dir / "english_words.txt");
    f.blacklist = PhraseBlacklist::load(data_dir / "non_reasoning_phrases.txt");
    return f;
}

std::vector<std::string> filter_explanations(std::span<const RawExplanationRecord> records,
                                             const ExplanationFilters& filters, int min_score) {
    std::vector<std::string> out;
    for (const RawExplanationRecord& rec : records) {
        if (rec.score < min_score) continue;
        if (!filters.is_english(rec.text)) continue;
        if (filters.is_non_reasoning(rec.text)) continue;
        out.push_back(rec.text);
    }
    return out;
}

}  // namespace georeason::corpus
