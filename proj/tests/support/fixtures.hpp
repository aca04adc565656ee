// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "georeason/corpus/types.hpp"
#include "georeason/imaging/image.hpp"

namespace fixtures {

// Self-deleting scratch directory.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

std::filesystem::path data_dir();  // bundled data files (compile-time path)

georeason::img::Image solid_image(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b);
// Deterministic per-pixel pattern keyed by `key`, so distinct images embed
// to distinct vectors.
georeason::img::Image patterned_image(int w, int h, std::uint32_t key);

struct CorpusSpec {
    std::size_t samples = 2;
    std::size_t panorama_per_sample = 3;
    bool full_labels = true;  // state/city/street populated
};

struct BuiltCorpus {
    std::filesystem::path manifest;
    std::filesystem::path image_root;
    std::vector<georeason::corpus::GeoSample> samples;
};

// Writes images plus a clean (string-explanation) corpus manifest.
BuiltCorpus build_corpus(const std::filesystem::path& dir, const CorpusSpec& spec);

struct BuiltKnowledge {
    std::filesystem::path manifest;
    std::filesystem::path image_root;
    std::vector<georeason::corpus::KnowledgeEntry> entries;
};

BuiltKnowledge build_knowledge(const std::filesystem::path& dir, std::size_t entries);

// CLI process driver; the binary path comes from $GEOREASON_BIN.
struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace fixtures
