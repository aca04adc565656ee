// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <memory>
#include <string>

#include "georeason/backends/contracts.hpp"

namespace georeason::backends {

// HTTP clients for the three services. All of them retry transport errors
// and 5xx responses with exponential backoff (base * 2^attempt), never retry
// 4xx, and enforce the configured deadline per request. Images travel
// base64-encoded inline. Wire schemas:
//   detector:  POST <endpoint>/detect  {"image_b64":.., "terms":[..]}
//              -> {"detections":[{"x","y","w","h","term","confidence"},..]}
//   encoder:   POST <endpoint>/embed   {"image_b64":..} or {"text":..}
//              -> {"dim":.., "values":[..]}
//   generator: POST <endpoint>/generate  chat-completions-compatible body
//              -> text of the first choice
class RemoteDetector : public DetectorBackend {
public:
    explicit RemoteDetector(BackendConfig config);
    ~RemoteDetector() override;

    std::vector<Detection> detect(const std::string& image_id,
                                  std::span<const std::uint8_t> image_bytes,
                                  std::span<const std::string> terms) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

class RemoteEncoder : public EncoderBackend {
public:
    // encoder_id doubles as the index compatibility key; supports_text
    // advertises token-level text embeddings (one /embed call per token).
    RemoteEncoder(BackendConfig config, std::string encoder_id, std::size_t dim,
                  bool supports_text = false);
    ~RemoteEncoder() override;

    std::string encoder_id() const override;
    std::size_t dim() const override;
    retrieval::EmbeddingVector embed_image(const std::string& image_id,
                                           std::span<const std::uint8_t> image_bytes) override;
    bool supports_text_tokens() const override;
    std::vector<retrieval::EmbeddingVector> embed_text_tokens(const std::string& text) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

class RemoteGenerator : public GeneratorBackend {
public:
    RemoteGenerator(BackendConfig config, std::string model_id);
    ~RemoteGenerator() override;

    std::string model_id() const override;
    std::string generate(const GeneratorRequest& request) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace georeason::backends
