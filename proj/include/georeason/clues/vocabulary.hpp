// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace georeason::clues {

// Term list handed to the open-vocabulary detector, either loaded from a
// vocabulary file or derived from corpus text. source_hash fingerprints the
// text (or file) it came from so runs can prove which vocabulary they used.
struct DetectionPromptVocabulary {
    std::vector<std::string> terms;  // lowercase, unique, each at most 4 words
    std::string source_hash;

    bool contains(std::string_view term) const;
};

// Words that cannot be detection terms: function words, common verbs,
// bare adjectives. One word per line, '#' comments.
class TermStoplist {
public:
    static TermStoplist load(const std::filesystem::path& path);

    bool contains(std::string_view lowercase_word) const;
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

// Frequency-based term derivation: lowercase, strip punctuation, drop
// stopwords and tokens shorter than 3 chars, then keep the top_n most
// frequent candidates, ties broken lexicographically. Throws EmptyCorpusText
// when nothing survives.
DetectionPromptVocabulary build_prompt_vocabulary(std::span<const std::string> explanations,
                                                  std::span<const std::string> snippets,
                                                  std::size_t top_n, const TermStoplist& stoplist);

// Vocabulary files: one term per line, '#' comments; duplicates collapse to
// their first occurrence. source_hash is the digest of the file bytes.
DetectionPromptVocabulary load_vocabulary(const std::filesystem::path& path);
void save_vocabulary(const DetectionPromptVocabulary& vocabulary,
                     const std::filesystem::path& path);

}  // namespace georeason::clues
