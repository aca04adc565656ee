// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "georeason/corpus/types.hpp"

namespace georeason::corpus {

inline constexpr int kDefaultMinScore = 4000;

// Lookup over the bundled common-English word list. Loading expands each
// base word with its regular inflections (plural -s/-es, past -ed/-d,
// progressive -ing with final-e drop) so ordinary prose scores well against
// a compact list.
class EnglishWordList {
public:
    static EnglishWordList load(const std::filesystem::path& path);

    bool contains(std::string_view lowercase_word) const;
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

// Case-insensitive phrase blacklist for explanations that rely on
// non-reasoning shortcuts (living nearby, having played the round before).
class PhraseBlacklist {
public:
    static PhraseBlacklist load(const std::filesystem::path& path);

    bool matches(std::string_view text) const;
    std::size_t size() const { return phrases_.size(); }

private:
    std::vector<std::string> phrases_;
};

struct ExplanationFilters {
    double min_ascii_fraction = 0.9;
    double min_known_token_fraction = 0.6;
    EnglishWordList words;
    PhraseBlacklist blacklist;

    // Optional replacements for the bundled heuristics.
    std::function<bool(std::string_view)> english_predicate;
    std::function<bool(std::string_view)> non_reasoning_predicate;

    bool is_english(std::string_view text) const;
    bool is_non_reasoning(std::string_view text) const;

    // Loads english_words.txt and non_reasoning_phrases.txt from data_dir.
    static ExplanationFilters load(const std::filesystem::path& data_dir);
};

// Keeps records whose score is >= min_score, that read as English, and that
// do not hit the non-reasoning blacklist. Order preserved; pure function of
// its inputs.
std::vector<std::string> filter_explanations(std::span<const RawExplanationRecord> records,
                                             const ExplanationFilters& filters,
                                             int min_score = kDefaultMinScore);

}  // namespace georeason::corpus
