// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/backends/remote.hpp"

#include <httplib.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "georeason/errors.hpp"
#include "georeason/util/base64.hpp"
#include "georeason/util/text.hpp"

namespace georeason::backends {

using nlohmann::json;

namespace {

struct Endpoint {
    std::string base;  // scheme://host[:port]
    std::string path_prefix;
};

Endpoint split_endpoint(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw ConfigError("backend endpoint must include a scheme: " + url);
    }
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, ""};
    std::string prefix = url.substr(path_start);
    if (prefix == "/") prefix.clear();
    return {url.substr(0, path_start), prefix};
}

// One configured client per backend object; httplib clients are safe for
// concurrent use across threads.
class HttpChannel {
public:
    HttpChannel(const BackendConfig& config, std::string stage)
        : config_(config), stage_(std::move(stage)), endpoint_(split_endpoint(config.endpoint)),
          client_(endpoint_.base) {
        auto timeout = std::chrono::duration<double>(config.timeout_seconds);
        auto timeout_ms = std::chrono::duration_cast<std::chrono::milliseconds>(timeout);
        client_.set_connection_timeout(timeout_ms);
        client_.set_read_timeout(timeout_ms);
        client_.set_write_timeout(timeout_ms);
        if (!config.credential_env.empty()) {
            const char* token = std::getenv(config.credential_env.c_str());
            if (token == nullptr || *token == '\0') {
                throw ConfigError("credential environment variable '" + config.credential_env +
                                  "' is not set");
            }
            client_.set_default_headers({{"Authorization", std::string("Bearer ") + token}});
        }
    }

    // Returns the 2xx body. Throws BackendRequestError on any 4xx at once;
    // BackendUnavailable / DeadlineExceeded once the retry budget is spent.
    std::string post_json(const std::string& path, const json& body, const std::string& item_id) {
        std::string payload = body.dump();
        bool saw_timeout = false;
        std::string last_failure;
        for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
            if (attempt > 0) {
                double delay = config_.backoff_base_seconds * std::pow(2.0, attempt - 1);
                std::this_thread::sleep_for(std::chrono::duration<double>(delay));
            }
            auto res = client_.Post(endpoint_.path_prefix + path, payload, "application/json");
            if (!res) {
                auto err = res.error();
                if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read ||
                    err == httplib::Error::Write) {
                    saw_timeout = true;
                }
                last_failure = httplib::to_string(err);
                continue;
            }
            if (res->status >= 200 && res->status < 300) return res->body;
            if (res->status >= 400 && res->status < 500) {
                throw BackendRequestError("request rejected with HTTP " +
                                              std::to_string(res->status),
                                          stage_, item_id, config_.endpoint);
            }
            last_failure = "HTTP " + std::to_string(res->status);
        }
        if (saw_timeout) {
            throw DeadlineExceeded("deadline exceeded after " +
                                       std::to_string(config_.max_retries + 1) + " attempts",
                                   stage_, item_id, config_.endpoint);
        }
        throw BackendUnavailable("unavailable after " + std::to_string(config_.max_retries + 1) +
                                     " attempts (" + last_failure + ")",
                                 stage_, item_id, config_.endpoint);
    }

    json parse_response(const std::string& body, const std::string& item_id) {
        json j = json::parse(body, nullptr, false);
        if (j.is_discarded()) {
            throw BackendMalformedResponse("response is not valid JSON", stage_, item_id,
                                           config_.endpoint);
        }
        return j;
    }

    [[noreturn]] void malformed(const std::string& why, const std::string& item_id) {
        throw BackendMalformedResponse(why, stage_, item_id, config_.endpoint);
    }

    const BackendConfig& config() const { return config_; }

private:
    BackendConfig config_;
    std::string stage_;
    Endpoint endpoint_;
    httplib::Client client_;
};

}  // namespace

// EncoderBackend default: text tokens unsupported unless a backend opts in.
std::vector<retrieval::EmbeddingVector> EncoderBackend::embed_text_tokens(
    const std::string& /*text*/) {
    throw Error("this encoder backend does not support text-token embeddings");
}

// --- detector ---------------------------------------------------------------

struct RemoteDetector::Impl {
    explicit Impl(BackendConfig config) : channel(config, "detection") {}
    HttpChannel channel;
};

RemoteDetector::RemoteDetector(BackendConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

RemoteDetector::~RemoteDetector() = default;

std::vector<Detection> RemoteDetector::detect(const std::string& image_id,
                                              std::span<const std::uint8_t> image_bytes,
                                              std::span<const std::string> terms) {
    json body;
    body["image_b64"] = util::base64_encode(image_bytes.data(), image_bytes.size());
    body["terms"] = std::vector<std::string>(terms.begin(), terms.end());
    json j = impl_->channel.parse_response(impl_->channel.post_json("/detect", body, image_id),
                                           image_id);
    if (!j.is_object() || !j.contains("detections") || !j["detections"].is_array()) {
        impl_->channel.malformed("missing 'detections' array", image_id);
    }
    std::vector<Detection> out;
    for (const json& d : j["detections"]) {
        if (!d.is_object() || !d.contains("x") || !d.contains("y") || !d.contains("w") ||
            !d.contains("h") || !d.contains("term") || !d.contains("confidence") ||
            !d["term"].is_string() || !d["confidence"].is_number()) {
            impl_->channel.malformed("malformed detection record", image_id);
        }
        Detection det;
        det.x = d["x"].get<int>();
        det.y = d["y"].get<int>();
        det.w = d["w"].get<int>();
        det.h = d["h"].get<int>();
        det.term = d["term"].get<std::string>();
        det.confidence = d["confidence"].get<double>();
        if (det.confidence < 0.0 || det.confidence > 1.0) {
            impl_->channel.malformed("confidence outside [0,1]", image_id);
        }
        bool known_term = false;
        for (const std::string& t : terms) {
            if (t == det.term) {
                known_term = true;
                break;
            }
        }
        if (!known_term) {
            impl_->channel.malformed("detection term '" + det.term + "' was not requested",
                                     image_id);
        }
        out.push_back(std::move(det));
    }
    return out;
}

// --- encoder ----------------------------------------------------------------

struct RemoteEncoder::Impl {
    Impl(BackendConfig config, std::string id, std::size_t dim, bool text)
        : channel(config, "encoding"), encoder_id(std::move(id)), dim(dim),
          supports_text(text) {}

    retrieval::EmbeddingVector parse_vector(const json& j, const std::string& item_id) {
        if (!j.is_object() || !j.contains("dim") || !j.contains("values") ||
            !j["values"].is_array()) {
            channel.malformed("missing 'dim'/'values'", item_id);
        }
        std::size_t got = j["dim"].get<std::size_t>();
        if (got != dim || j["values"].size() != dim) {
            throw DimensionMismatch("encoder returned dim " + std::to_string(got) +
                                    ", expected " + std::to_string(dim));
        }
        retrieval::EmbeddingVector v;
        v.values.reserve(dim);
        for (const json& x : j["values"]) {
            if (!x.is_number()) channel.malformed("non-numeric embedding value", item_id);
            double d = x.get<double>();
            if (!std::isfinite(d)) channel.malformed("non-finite embedding value", item_id);
            v.values.push_back(d);
        }
        return v;
    }

    HttpChannel channel;
    std::string encoder_id;
    std::size_t dim;
    bool supports_text;
};

RemoteEncoder::RemoteEncoder(BackendConfig config, std::string encoder_id, std::size_t dim,
                             bool supports_text)
    : impl_(std::make_unique<Impl>(std::move(config), std::move(encoder_id), dim, supports_text)) {}

RemoteEncoder::~RemoteEncoder() = default;

std::string RemoteEncoder::encoder_id() const {
    return impl_->encoder_id;
}

std::size_t RemoteEncoder::dim() const {
    return impl_->dim;
}

retrieval::EmbeddingVector RemoteEncoder::embed_image(const std::string& image_id,
                                                      std::span<const std::uint8_t> image_bytes) {
    json body;
    body["image_b64"] = util::base64_encode(image_bytes.data(), image_bytes.size());
    json j = impl_->channel.parse_response(impl_->channel.post_json("/embed", body, image_id),
                                           image_id);
    return impl_->parse_vector(j, image_id);
}

bool RemoteEncoder::supports_text_tokens() const {
    return impl_->supports_text;
}

std::vector<retrieval::EmbeddingVector> RemoteEncoder::embed_text_tokens(const std::string& text) {
    if (!impl_->supports_text) return EncoderBackend::embed_text_tokens(text);
    std::vector<retrieval::EmbeddingVector> out;
    for (const std::string& token : util::split_whitespace(text)) {
        json body;
        body["text"] = token;
        json j = impl_->channel.parse_response(impl_->channel.post_json("/embed", body, token),
                                               token);
        out.push_back(impl_->parse_vector(j, token));
    }
    return out;
}

// --- generator --------------------------------------------------------------

struct RemoteGenerator::Impl {
    Impl(BackendConfig config, std::string id)
        : channel(config, "generation"), model_id(std::move(id)) {}
    HttpChannel channel;
    std::string model_id;
};

RemoteGenerator::RemoteGenerator(BackendConfig config, std::string model_id)
    : impl_(std::make_unique<Impl>(std::move(config), std::move(model_id))) {}

RemoteGenerator::~RemoteGenerator() = default;

std::string RemoteGenerator::model_id() const {
    return impl_->model_id;
}

std::string RemoteGenerator::generate(const GeneratorRequest& request) {
    // Chat-completions shape: one user message whose content parts are the
    // ordered images followed by the text prompt.
    json content = json::array();
    for (const auto& image : request.images) {
        json part;
        part["type"] = "image_url";
        part["image_url"]["url"] =
            "data:image/x-portable-pixmap;base64," + util::base64_encode(image.data(), image.size());
        content.push_back(std::move(part));
    }
    json text_part;
    text_part["type"] = "text";
    text_part["text"] = request.text;
    content.push_back(std::move(text_part));

    json body;
    body["model"] = impl_->model_id;
    body["messages"] = json::array({json{{"role", "user"}, {"content", std::move(content)}}});
    if (!request.sample_id.empty()) body["user"] = request.sample_id;
    for (const auto& [key, value] : request.sampling_options.items()) {
        body[key] = value;
    }

    json j = impl_->channel.parse_response(
        impl_->channel.post_json("/generate", body, request.sample_id), request.sample_id);
    if (!j.is_object() || !j.contains("choices") || !j["choices"].is_array() ||
        j["choices"].empty()) {
        impl_->channel.malformed("missing 'choices'", request.sample_id);
    }
    const json& first = j["choices"][0];
    if (!first.contains("message") || !first["message"].contains("content") ||
        !first["message"]["content"].is_string()) {
        impl_->channel.malformed("first choice has no message content", request.sample_id);
    }
    return first["message"]["content"].get<std::string>();
}

}  // namespace georeason::backends
