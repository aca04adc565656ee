// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/eval/match.hpp"

#include <algorithm>
#include <fstream>

#include "georeason/errors.hpp"
#include "georeason/util/text.hpp"

namespace georeason::eval {

namespace util = georeason::util;

AliasTable AliasTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open alias table: " + path.string());
    AliasTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto t = util::trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto colon = t.find(':');
        if (colon == std::string_view::npos) {
            throw Error("alias table line " + std::to_string(line_no) +
                        ": expected 'canonical: alias, ...'");
        }
        std::string canonical = canonical_text(t.substr(0, colon));
        if (canonical.empty()) {
            throw Error("alias table line " + std::to_string(line_no) + ": empty canonical");
        }
        for (const std::string& alias_raw : util::split(std::string(t.substr(colon + 1)), ',')) {
            std::string alias = canonical_text(alias_raw);
            if (alias.empty()) continue;
            auto [it, inserted] = table.alias_to_canonical_.emplace(alias, canonical);
            if (!inserted && it->second != canonical) {
                throw Error("alias '" + alias + "' maps to both '" + it->second + "' and '" +
                            canonical + "'");
            }
        }
    }
    return table;
}

std::string AliasTable::resolve(const std::string& canonical) const {
    auto it = alias_to_canonical_.find(canonical);
    return it == alias_to_canonical_.end() ? canonical : it->second;
}

std::string canonical_text(std::string_view s) {
    return util::collapse_whitespace(
        util::strip_punctuation(util::to_lower_ascii(util::strip_diacritics(s))));
}

bool fuzzy_match(std::string_view candidate, std::string_view truth, const AliasTable& aliases,
                 double threshold) {
    std::string c = aliases.resolve(canonical_text(candidate));
    std::string t = aliases.resolve(canonical_text(truth));
    if (c.empty() || t.empty()) return false;
    if (c == t) return true;
    std::size_t dist = util::levenshtein(c, t);
    std::size_t max_len = std::max(c.size(), t.size());
    double similarity = 1.0 - static_cast<double>(dist) / static_cast<double>(max_len);
    return similarity >= threshold;
}

MatchResult match_location(const corpus::LocationLabel& candidate,
                           const corpus::LocationLabel& truth, const AliasTable& aliases,
                           MatchMode mode, double threshold) {
    MatchResult r;
    r.country = fuzzy_match(candidate.country, truth.country, aliases, threshold);
    r.state = fuzzy_match(candidate.state, truth.state, aliases, threshold);
    r.city = fuzzy_match(candidate.city, truth.city, aliases, threshold);
    r.street = fuzzy_match(candidate.street, truth.street, aliases, threshold);
    if (mode == MatchMode::Strict) {
        r.state = r.state && r.country;
        r.city = r.city && r.state;
        r.street = r.street && r.city;
    }
    return r;
}

AccuracyReport accuracy(std::span<const MatchResult> records) {
    if (records.empty()) throw EmptyEvaluationSet("accuracy over zero records");
    AccuracyReport report;
    report.n = records.size();
    for (const MatchResult& m : records) {
        report.country_matched += m.country ? 1 : 0;
        report.state_matched += m.state ? 1 : 0;
        report.city_matched += m.city ? 1 : 0;
        report.street_matched += m.street ? 1 : 0;
    }
    return report;
}

}  // namespace georeason::eval
