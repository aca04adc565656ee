// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "support/fixtures.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "georeason/corpus/manifest.hpp"

namespace fixtures {

using georeason::corpus::Continent;
using georeason::corpus::GeoSample;
using georeason::corpus::KnowledgeEntry;
using georeason::img::Image;

TempDir::TempDir() {
    static std::atomic<std::uint64_t> counter{0};
    auto base = std::filesystem::temp_directory_path();
    path_ = base / ("georeason_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

std::filesystem::path data_dir() {
    return GEOREASON_DATA_DIR;
}

Image solid_image(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    Image img;
    img.width = w;
    img.height = h;
    img.pixels.resize(std::size_t(w) * h * 3);
    for (std::size_t i = 0; i < img.pixels.size(); i += 3) {
        img.pixels[i] = r;
        img.pixels[i + 1] = g;
        img.pixels[i + 2] = b;
    }
    return img;
}

Image patterned_image(int w, int h, std::uint32_t key) {
    Image img;
    img.width = w;
    img.height = h;
    img.pixels.resize(std::size_t(w) * h * 3);
    std::uint32_t state = key * 2654435761u + 1;
    for (auto& px : img.pixels) {
        state = state * 1664525u + 1013904223u;
        px = static_cast<std::uint8_t>(state >> 24);
    }
    return img;
}

BuiltCorpus build_corpus(const std::filesystem::path& dir, const CorpusSpec& spec) {
    BuiltCorpus built;
    built.image_root = dir / "images";
    std::filesystem::create_directories(built.image_root);

    static constexpr Continent kContinents[] = {Continent::EU, Continent::NA, Continent::SA,
                                                Continent::AS, Continent::OC, Continent::AF};
    static constexpr const char* kCountries[] = {"France",    "United States", "Brazil",
                                                 "Japan",     "Australia",     "Kenya"};

    georeason::corpus::Corpus corpus;
    corpus.image_root = built.image_root;
    for (std::size_t i = 0; i < spec.samples; ++i) {
        GeoSample s;
        s.id = "s" + std::to_string(i);
        for (std::size_t p = 0; p < spec.panorama_per_sample; ++p) {
            std::string ref = s.id + "_view" + std::to_string(p) + ".ppm";
            georeason::img::save_ppm(
                patterned_image(24, 16, std::uint32_t(i * 100 + p + 1)), built.image_root / ref);
            s.panorama.push_back(ref);
        }
        s.latitude = -40.0 + double(i) * 7.0;
        s.longitude = 10.0 + double(i) * 13.0;
        std::size_t c = i % 6;
        s.location.country = kCountries[c];
        if (spec.full_labels) {
            s.location.state = "State" + std::to_string(i);
            s.location.city = "City" + std::to_string(i);
            s.location.street = "Street " + std::to_string(i);
        }
        s.continent = kContinents[c];
        s.explanations = {"The bollard shape and the road marking style point to " +
                              s.location.country + " sample " + std::to_string(i) + ".",
                          "Vegetation and signage text narrow this down to " +
                              s.location.country + "."};
        corpus.samples.push_back(s);
        built.samples.push_back(std::move(s));
    }
    built.manifest = dir / "corpus.jsonl";
    georeason::corpus::save_corpus(corpus, built.manifest);
    return built;
}

BuiltKnowledge build_knowledge(const std::filesystem::path& dir, std::size_t entries) {
    BuiltKnowledge built;
    built.image_root = dir / "kimages";
    std::filesystem::create_directories(built.image_root);

    georeason::corpus::KnowledgeBase kb;
    kb.image_root = built.image_root;
    for (std::size_t i = 0; i < entries; ++i) {
        KnowledgeEntry e;
        e.id = "k" + std::to_string(i);
        e.image = e.id + ".ppm";
        georeason::img::save_ppm(patterned_image(16, 16, std::uint32_t(9000 + i)),
                                 built.image_root / e.image);
        e.country = i % 2 == 0 ? "France" : "Brazil";
        e.snippet = "Knowledge snippet " + std::to_string(i) + " about bollards and plates.";
        kb.entries.push_back(e);
        built.entries.push_back(std::move(e));
    }
    built.manifest = dir / "knowledge.jsonl";
    georeason::corpus::save_knowledge(kb, built.manifest);
    return built;
}

CliResult run_cli(const std::vector<std::string>& args) {
    const char* bin = std::getenv("GEOREASON_BIN");
    if (bin == nullptr || *bin == '\0') {
        throw std::runtime_error("GEOREASON_BIN is not set; run through ctest");
    }
    std::string cmd = std::string("'") + bin + "'";
    for (const std::string& a : args) {
        cmd += " '" + a + "'";
    }
    cmd += " 2>&1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    CliResult result;
    char buf[4096];
    std::size_t n;
    while ((n = ::fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.output.append(buf, n);
    }
    int rc = ::pclose(pipe);
    result.exit_code = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    return result;
}

}  // namespace fixtures
