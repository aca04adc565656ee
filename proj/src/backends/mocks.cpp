// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/backends/mocks.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "georeason/errors.hpp"
#include "georeason/reasoning/parse.hpp"
#include "georeason/util/hash.hpp"

namespace georeason::backends {

using nlohmann::json;

namespace {

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open mock fixture: " + path.string());
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error("invalid JSON in mock fixture: " + path.string());
    return j;
}

}  // namespace

MockDetector MockDetector::from_json_file(const std::filesystem::path& path) {
    json j = load_json_file(path);
    Fixture fixture;
    for (const auto& [image_ref, dets] : j.items()) {
        std::vector<Detection> list;
        for (const json& d : dets) {
            Detection det;
            det.x = d.at("x").get<int>();
            det.y = d.at("y").get<int>();
            det.w = d.at("w").get<int>();
            det.h = d.at("h").get<int>();
            det.term = d.at("term").get<std::string>();
            det.confidence = d.at("confidence").get<double>();
            list.push_back(std::move(det));
        }
        fixture.emplace(image_ref, std::move(list));
    }
    return MockDetector(std::move(fixture));
}

std::vector<Detection> MockDetector::detect(const std::string& image_id,
                                            std::span<const std::uint8_t> /*image_bytes*/,
                                            std::span<const std::string> terms) {
    auto it = fixture_.find(image_id);
    if (it == fixture_.end()) return {};
    std::vector<Detection> out;
    for (const Detection& d : it->second) {
        if (std::find(terms.begin(), terms.end(), d.term) != terms.end()) {
            out.push_back(d);
        }
    }
    return out;
}

MockEncoder::MockEncoder(std::uint64_t seed, std::size_t dim) : seed_(seed), dim_(dim) {
    if (dim < 2) throw Error("mock encoder dim must be >= 2");
    id_ = "mock-encoder-s" + std::to_string(seed) + "-d" + std::to_string(dim);
}

retrieval::EmbeddingVector MockEncoder::vector_for(std::string_view domain,
                                                   std::string_view payload) const {
    // Expand digest(seed, domain, payload, block) into dim doubles in
    // [-1, 1), then normalize. Identical input always yields the identical
    // vector; distinct inputs collide only if SHA-256 does.
    retrieval::EmbeddingVector v;
    v.values.reserve(dim_);
    std::uint64_t block = 0;
    while (v.values.size() < dim_) {
        util::Sha256 h;
        std::uint64_t seed_le = seed_;
        h.update(&seed_le, sizeof(seed_le));
        h.update(domain);
        h.update(payload);
        std::uint64_t block_le = block++;
        h.update(&block_le, sizeof(block_le));
        auto digest = h.finish();
        for (std::size_t off = 0; off + 8 <= digest.size() && v.values.size() < dim_; off += 8) {
            std::uint64_t bits = 0;
            std::memcpy(&bits, digest.data() + off, 8);
            double unit = static_cast<double>(bits >> 11) / static_cast<double>(1ULL << 53);
            v.values.push_back(2.0 * unit - 1.0);
        }
    }
    double norm = 0.0;
    for (double x : v.values) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v.values) x /= norm;
    return v;
}

retrieval::EmbeddingVector MockEncoder::embed_image(const std::string& /*image_id*/,
                                                    std::span<const std::uint8_t> image_bytes) {
    return vector_for("image", std::string_view(reinterpret_cast<const char*>(image_bytes.data()),
                                                image_bytes.size()));
}

std::vector<retrieval::EmbeddingVector> MockEncoder::embed_text_tokens(const std::string& text) {
    std::vector<retrieval::EmbeddingVector> out;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            out.push_back(vector_for("text-token", token));
            token.clear();
        }
    };
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    return out;
}

MockGenerator MockGenerator::echo_template(std::map<std::string, EchoEntry> table) {
    MockGenerator g(Mode::EchoTemplate, "mock-generator-echo");
    g.echo_table_ = std::move(table);
    return g;
}

MockGenerator MockGenerator::fixed_text(std::string text) {
    MockGenerator g(Mode::FixedText, "mock-generator-fixed");
    g.fixed_text_ = std::move(text);
    return g;
}

MockGenerator MockGenerator::script(std::map<std::string, std::string> table) {
    MockGenerator g(Mode::Script, "mock-generator-script");
    g.script_table_ = std::move(table);
    return g;
}

MockGenerator MockGenerator::echo_template_from_json_file(const std::filesystem::path& path) {
    json j = load_json_file(path);
    std::map<std::string, EchoEntry> table;
    for (const auto& [sample_id, entry] : j.items()) {
        EchoEntry e;
        e.location.country = entry.value("country", "");
        e.location.state = entry.value("state", "");
        e.location.city = entry.value("city", "");
        e.location.street = entry.value("street", "");
        e.explanation = entry.value("explanation", "");
        table.emplace(sample_id, std::move(e));
    }
    return echo_template(std::move(table));
}

MockGenerator MockGenerator::script_from_json_file(const std::filesystem::path& path) {
    json j = load_json_file(path);
    std::map<std::string, std::string> table;
    for (const auto& [sample_id, text] : j.items()) {
        table.emplace(sample_id, text.get<std::string>());
    }
    return script(std::move(table));
}

std::string MockGenerator::generate(const GeneratorRequest& request) {
    switch (mode_) {
        case Mode::FixedText:
            return fixed_text_;
        case Mode::EchoTemplate: {
            auto it = echo_table_.find(request.sample_id);
            if (it == echo_table_.end()) {
                throw UnknownScriptKey("no echo entry for sample '" + request.sample_id + "'");
            }
            return reasoning::format_answer(it->second.location, it->second.explanation);
        }
        case Mode::Script: {
            auto it = script_table_.find(request.sample_id);
            if (it == script_table_.end()) {
                throw UnknownScriptKey("no script entry for sample '" + request.sample_id + "'");
            }
            return it->second;
        }
    }
    return {};
}

}  // namespace georeason::backends
