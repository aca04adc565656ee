// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <memory>
#include <optional>
#include <string>

#include "georeason/backends/contracts.hpp"
#include "georeason/clues/detect.hpp"
#include "georeason/eval/match.hpp"
#include "georeason/reasoning/pipeline.hpp"
#include "georeason/retrieval/topk.hpp"

namespace georeason {

// One mock or remote service, as configured.
struct BackendChoice {
    std::string type = "mock";  // "mock" | "http"

    // mock detector
    std::filesystem::path fixture;
    // mock encoder
    std::optional<std::uint64_t> seed;
    std::size_t dim = retrieval::kDefaultEmbeddingDim;
    // mock generator
    std::string mode = "fixed_text";  // echo_template | fixed_text | script
    std::filesystem::path table;
    std::string text;

    // http
    backends::BackendConfig http;
    std::string model_id;      // generator
    std::string encoder_id;    // encoder
    bool supports_text = false;
};

// The single recorded artifact describing a run. Flags override individual
// fields; relative paths in the file resolve against the file's directory.
struct PipelineConfig {
    std::filesystem::path data_dir = "data";
    std::filesystem::path corpus_manifest;
    std::filesystem::path knowledge_manifest;
    std::filesystem::path vocabulary_path;  // empty with top_n>0 means "derive from corpus"
    std::size_t vocab_top_n = 0;
    std::filesystem::path index_path;

    reasoning::PipelineStages stages;
    clues::DetectionParams detection;
    retrieval::RetrieveOptions retrieval;
    reasoning::ThumbnailParams thumbnail;
    std::string template_id = "default";
    std::filesystem::path template_dir;  // empty -> built-in registry

    BackendChoice detector;
    BackendChoice encoder;
    BackendChoice generator;
    nlohmann::json sampling = nlohmann::json::object();

    std::filesystem::path output_dir = "out";
    std::size_t concurrency = 1;
    std::uint64_t seed = 1;

    eval::MatchMode match_mode = eval::MatchMode::Independent;
    double fuzzy_threshold = eval::kDefaultFuzzyThreshold;
    std::filesystem::path alias_table_path;  // empty -> data_dir/country_aliases.txt
    bool scale_x100 = true;

    // Digest of the config file content plus the effective seed; recorded in
    // every prediction's provenance. Execution details (output dir,
    // concurrency) deliberately stay out of it.
    std::string semantic_hash;
    std::string file_content;  // raw bytes the hash covers
};

// Defaults when path is empty; otherwise parses the JSON config. Throws
// ConfigError on unknown keys, bad types, or invalid values.
PipelineConfig load_config(const std::filesystem::path& path);

// Re-applies CLI overrides and recomputes the semantic hash.
void apply_seed_override(PipelineConfig& config, std::uint64_t seed);

// Instantiate configured backends (mock or remote).
std::unique_ptr<backends::DetectorBackend> make_detector(const PipelineConfig& config);
std::unique_ptr<backends::EncoderBackend> make_encoder(const PipelineConfig& config);
std::unique_ptr<backends::GeneratorBackend> make_generator(const PipelineConfig& config);

}  // namespace georeason
