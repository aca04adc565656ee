// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/corpus/types.hpp"

namespace georeason::corpus {

std::optional<Continent> continent_from_string(std::string_view s) {
    if (s == "AF") return Continent::AF;
    if (s == "AN") return Continent::AN;
    if (s == "AS") return Continent::AS;
    if (s == "EU") return Continent::EU;
    if (s == "NA") return Continent::NA;
    if (s == "OC") return Continent::OC;
    if (s == "SA") return Continent::SA;
    return std::nullopt;
}

std::string_view to_string(Continent c) {
    switch (c) {
        case Continent::AF: return "AF";
        case Continent::AN: return "AN";
        case Continent::AS: return "AS";
        case Continent::EU: return "EU";
        case Continent::NA: return "NA";
        case Continent::OC: return "OC";
        case Continent::SA: return "SA";
    }
    return "??";
}

const GeoSample* Corpus::find(std::string_view id) const {
    auto it = index_by_id.find(std::string(id));
    return it == index_by_id.end() ? nullptr : &samples[it->second];
}

std::filesystem::path Corpus::resolve_image(std::string_view ref) const {
    return image_root / std::filesystem::path(std::string(ref));
}

const KnowledgeEntry* KnowledgeBase::find(std::string_view id) const {
    auto it = index_by_id.find(std::string(id));
    return it == index_by_id.end() ? nullptr : &entries[it->second];
}

std::filesystem::path KnowledgeBase::resolve_image(std::string_view ref) const {
    return image_root / std::filesystem::path(std::string(ref));
}

}  // namespace georeason::corpus
