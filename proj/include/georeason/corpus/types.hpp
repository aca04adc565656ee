// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace georeason::corpus {

enum class Continent { AF, AN, AS, EU, NA, OC, SA };

std::optional<Continent> continent_from_string(std::string_view s);
std::string_view to_string(Continent c);

// Hierarchical location. Empty fields mean "not specified": ground-truth
// labels always carry a country (enforced at load), predictions may leave
// any field empty.
struct LocationLabel {
    std::string country;
    std::string state;
    std::string city;
    std::string street;

    bool operator==(const LocationLabel&) const = default;
};

// One location: its street-view panorama set, coordinates, label and the
// human-written reference explanations.
struct GeoSample {
    std::string id;
    std::vector<std::string> panorama;  // image refs, relative to the image root
    double latitude = 0.0;
    double longitude = 0.0;
    LocationLabel location;
    std::vector<std::string> explanations;
    Continent continent = Continent::EU;

    bool operator==(const GeoSample&) const = default;
};

struct Corpus {
    std::filesystem::path image_root;
    std::vector<GeoSample> samples;

    const GeoSample* find(std::string_view id) const;
    std::filesystem::path resolve_image(std::string_view ref) const;

    // id -> position in `samples`; rebuilt by the loader.
    std::unordered_map<std::string, std::size_t> index_by_id;
};

// One country-specific object image with its identification snippet.
struct KnowledgeEntry {
    std::string id;
    std::string image;  // ref relative to the image root
    std::string country;
    std::string snippet;

    bool operator==(const KnowledgeEntry&) const = default;
};

struct KnowledgeBase {
    std::filesystem::path image_root;
    std::vector<KnowledgeEntry> entries;

    const KnowledgeEntry* find(std::string_view id) const;
    std::filesystem::path resolve_image(std::string_view ref) const;

    std::unordered_map<std::string, std::size_t> index_by_id;
};

// A community explanation before filtering, with its game score.
struct RawExplanationRecord {
    std::string text;
    int score = 0;  // 0..5000
    std::optional<std::string> language_hint;
};

struct CorpusStats {
    std::size_t location_count = 0;
    std::size_t panorama_image_count = 0;
    std::size_t explanation_count = 0;
    // Rounded half-up to 2 decimals; unset for an empty corpus.
    std::optional<double> mean_panoramas_per_location;
    std::size_t min_panoramas = 0;
    std::size_t max_panoramas = 0;
    std::map<Continent, std::size_t> per_continent;
};

}  // namespace georeason::corpus
