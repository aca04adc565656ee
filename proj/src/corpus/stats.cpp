// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/corpus/stats.hpp"

#include <algorithm>
#include <cstdio>

namespace georeason::corpus {

CorpusStats corpus_stats(const Corpus& corpus) {
    CorpusStats st;
    st.location_count = corpus.samples.size();
    if (corpus.samples.empty()) return st;

    st.min_panoramas = corpus.samples.front().panorama.size();
    st.max_panoramas = st.min_panoramas;
    for (const GeoSample& s : corpus.samples) {
        st.panorama_image_count += s.panorama.size();
        st.explanation_count += s.explanations.size();
        st.min_panoramas = std::min(st.min_panoramas, s.panorama.size());
        st.max_panoramas = std::max(st.max_panoramas, s.panorama.size());
        ++st.per_continent[s.continent];
    }
    // Mean to 2 decimals, round-half-up, done in integers to dodge
    // floating-point representation of the halfway cases.
    std::uint64_t total = st.panorama_image_count;
    std::uint64_t n = st.location_count;
    std::uint64_t scaled = (200 * total + n) / (2 * n);
    st.mean_panoramas_per_location = static_cast<double>(scaled) / 100.0;
    return st;
}

std::string render_stats_table(const CorpusStats& stats) {
    char buf[256];
    std::string out;
    out += "metric                         value\n";
    out += "-----------------------------  ----------\n";
    std::snprintf(buf, sizeof(buf), "%-29s  %10zu\n", "locations", stats.location_count);
    out += buf;
    std::snprintf(buf, sizeof(buf), "%-29s  %10zu\n", "panorama images",
                  stats.panorama_image_count);
    out += buf;
    std::snprintf(buf, sizeof(buf), "%-29s  %10zu\n", "explanations", stats.explanation_count);
    out += buf;
    if (stats.mean_panoramas_per_location) {
        std::snprintf(buf, sizeof(buf), "%-29s  %10.2f\n", "mean panoramas/location",
                      *stats.mean_panoramas_per_location);
        out += buf;
        std::snprintf(buf, sizeof(buf), "%-29s  %10zu\n", "min panoramas/location",
                      stats.min_panoramas);
        out += buf;
        std::snprintf(buf, sizeof(buf), "%-29s  %10zu\n", "max panoramas/location",
                      stats.max_panoramas);
        out += buf;
    } else {
        std::snprintf(buf, sizeof(buf), "%-29s  %10s\n", "mean panoramas/location", "-");
        out += buf;
    }
    for (const auto& [continent, count] : stats.per_continent) {
        std::snprintf(buf, sizeof(buf), "locations in %-16s  %10zu\n",
                      std::string(to_string(continent)).c_str(), count);
        out += buf;
    }
    return out;
}

}  // namespace georeason::corpus
