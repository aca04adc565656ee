// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <cstdint>
#include <json.hpp>
#include <span>
#include <string>
#include <vector>

#include "georeason/retrieval/embedding.hpp"

namespace georeason::backends {

// One raw detection as reported by an open-vocabulary detector.
struct Detection {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
    std::string term;
    double confidence = 0.0;
};

// Contract for the open-vocabulary object detection service. Implementations
// must only return terms drawn from the requested list, with confidences in
// [0,1]. image_id is diagnostic context and keys mock fixtures.
class DetectorBackend {
public:
    virtual ~DetectorBackend() = default;

    virtual std::vector<Detection> detect(const std::string& image_id,
                                          std::span<const std::uint8_t> image_bytes,
                                          std::span<const std::string> terms) = 0;
};

// Contract for the visual encoder service. A backend instance has a fixed
// output dimension and a stable encoder_id used for index compatibility
// checks. Token-level text embedding is optional (BERTScore support).
class EncoderBackend {
public:
    virtual ~EncoderBackend() = default;

    virtual std::string encoder_id() const = 0;
    virtual std::size_t dim() const = 0;

    virtual retrieval::EmbeddingVector embed_image(const std::string& image_id,
                                                   std::span<const std::uint8_t> image_bytes) = 0;

    virtual bool supports_text_tokens() const { return false; }

    // One vector per token of `text`. Throws Error if unsupported.
    virtual std::vector<retrieval::EmbeddingVector> embed_text_tokens(const std::string& text);
};

struct GeneratorRequest {
    std::string sample_id;  // threads through to mocks and request tracing
    std::vector<std::vector<std::uint8_t>> images;  // ordered: thumbnail, then clue crops
    std::string text;
    nlohmann::json sampling_options;  // passed through to the service verbatim

    GeneratorRequest() : sampling_options(nlohmann::json::object()) {}
};

// Contract for the multimodal generator service. Empty output text is a
// valid return; absence of output is not.
class GeneratorBackend {
public:
    virtual ~GeneratorBackend() = default;

    virtual std::string model_id() const = 0;
    virtual std::string generate(const GeneratorRequest& request) = 0;
};

struct BackendConfig {
    std::string endpoint;
    double timeout_seconds = 30.0;
    int max_retries = 2;
    double backoff_base_seconds = 0.2;
    std::string credential_env;  // env var holding the bearer token; never a literal secret
};

}  // namespace georeason::backends
