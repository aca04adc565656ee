// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "georeason/corpus/types.hpp"

namespace georeason::eval {

inline constexpr double kDefaultFuzzyThreshold = 0.85;

// Name-variant table ("usa" -> "united states"). Lookups happen on
// canonicalized text; an alias may belong to only one canonical.
class AliasTable {
public:
    static AliasTable empty() { return AliasTable{}; }

    // File format: one "canonical: alias, alias, ..." entry per line,
    // '#' comments.
    static AliasTable load(const std::filesystem::path& path);

    // Maps a canonicalized string through the table; unknown strings pass
    // through unchanged.
    std::string resolve(const std::string& canonical) const;

    std::size_t size() const { return alias_to_canonical_.size(); }

private:
    std::unordered_map<std::string, std::string> alias_to_canonical_;
};

// Lowercases, strips diacritics and punctuation, collapses whitespace.
std::string canonical_text(std::string_view s);

// Equality after canonicalization and aliasing, or normalized Levenshtein
// similarity (1 - dist/max(len)) at or above the threshold. An empty
// candidate never matches a non-empty truth.
bool fuzzy_match(std::string_view candidate, std::string_view truth, const AliasTable& aliases,
                 double threshold = kDefaultFuzzyThreshold);

enum class MatchMode { Independent, Strict };

struct MatchResult {
    bool country = false;
    bool state = false;
    bool city = false;
    bool street = false;
};

// Independent mode scores each level on its own; strict mode credits a level
// only when every coarser level matched too. A level needs both sides
// non-empty to match.
MatchResult match_location(const corpus::LocationLabel& candidate,
                           const corpus::LocationLabel& truth, const AliasTable& aliases,
                           MatchMode mode, double threshold = kDefaultFuzzyThreshold);

struct AccuracyReport {
    std::size_t n = 0;
    std::size_t country_matched = 0;
    std::size_t state_matched = 0;
    std::size_t city_matched = 0;
    std::size_t street_matched = 0;

    double country() const { return static_cast<double>(country_matched) / n; }
    double state() const { return static_cast<double>(state_matched) / n; }
    double city() const { return static_cast<double>(city_matched) / n; }
    double street() const { return static_cast<double>(street_matched) / n; }
};

// Exact integer counting; throws EmptyEvaluationSet when records is empty.
AccuracyReport accuracy(std::span<const MatchResult> records);

}  // namespace georeason::eval
