// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "georeason/backends/contracts.hpp"
#include "georeason/corpus/types.hpp"

// Deterministic in-process stand-ins for the three model services. Every
// mock is a pure function of its construction parameters and call inputs,
// so a fully mock-wired pipeline run is bitwise reproducible.

namespace georeason::backends {

class MockDetector : public DetectorBackend {
public:
    using Fixture = std::map<std::string, std::vector<Detection>>;  // image ref -> detections

    explicit MockDetector(Fixture fixture) : fixture_(std::move(fixture)) {}

    // JSON file: {"<image ref>": [{"x":..,"y":..,"w":..,"h":..,"term":..,"confidence":..}, ...]}
    static MockDetector from_json_file(const std::filesystem::path& path);

    std::vector<Detection> detect(const std::string& image_id,
                                  std::span<const std::uint8_t> image_bytes,
                                  std::span<const std::string> terms) override;

private:
    Fixture fixture_;
};

// Unit-norm pseudo-random embeddings keyed by digest(seed, input bytes).
class MockEncoder : public EncoderBackend {
public:
    MockEncoder(std::uint64_t seed, std::size_t dim);

    std::string encoder_id() const override { return id_; }
    std::size_t dim() const override { return dim_; }

    retrieval::EmbeddingVector embed_image(const std::string& image_id,
                                           std::span<const std::uint8_t> image_bytes) override;

    bool supports_text_tokens() const override { return true; }
    std::vector<retrieval::EmbeddingVector> embed_text_tokens(const std::string& text) override;

private:
    retrieval::EmbeddingVector vector_for(std::string_view domain, std::string_view payload) const;

    std::uint64_t seed_;
    std::size_t dim_;
    std::string id_;
};

class MockGenerator : public GeneratorBackend {
public:
    struct EchoEntry {
        corpus::LocationLabel location;
        std::string explanation;
    };

    // Renders a well-formed "PLACE {...}. <explanation>" answer from the
    // table entry for the request's sample id.
    static MockGenerator echo_template(std::map<std::string, EchoEntry> table);

    static MockGenerator fixed_text(std::string text);

    // Verbatim per-sample outputs; unknown sample id -> UnknownScriptKey.
    static MockGenerator script(std::map<std::string, std::string> table);

    // echo_template table as JSON:
    // {"<sample id>": {"country":..,"state":..,"city":..,"street":..,"explanation":..}, ...}
    static MockGenerator echo_template_from_json_file(const std::filesystem::path& path);
    static MockGenerator script_from_json_file(const std::filesystem::path& path);

    std::string model_id() const override { return model_id_; }
    std::string generate(const GeneratorRequest& request) override;

private:
    enum class Mode { EchoTemplate, FixedText, Script };

    MockGenerator(Mode mode, std::string model_id) : mode_(mode), model_id_(std::move(model_id)) {}

    Mode mode_;
    std::string model_id_;
    std::map<std::string, EchoEntry> echo_table_;
    std::string fixed_text_;
    std::map<std::string, std::string> script_table_;
};

}  // namespace georeason::backends
