// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/config.hpp"

#include <set>

#include "georeason/backends/mocks.hpp"
#include "georeason/backends/remote.hpp"
#include "georeason/errors.hpp"
#include "georeason/util/files.hpp"
#include "georeason/util/hash.hpp"

namespace georeason {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& known,
                         const std::string& where) {
    for (const auto& [key, _] : j.items()) {
        if (!known.count(key)) {
            throw ConfigError("unknown config key '" + where + key + "'");
        }
    }
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base / path;
}

backends::BackendConfig parse_http(const json& j, const std::string& where) {
    reject_unknown_keys(j,
                        {"type", "endpoint", "timeout_s", "max_retries", "backoff_base_s",
                         "credential_env", "model_id", "encoder_id", "dim", "supports_text"},
                        where);
    backends::BackendConfig cfg;
    if (!j.contains("endpoint") || !j["endpoint"].is_string()) {
        throw ConfigError("backend '" + where + "' needs an endpoint");
    }
    cfg.endpoint = j["endpoint"].get<std::string>();
    cfg.timeout_seconds = j.value("timeout_s", cfg.timeout_seconds);
    cfg.max_retries = j.value("max_retries", cfg.max_retries);
    cfg.backoff_base_seconds = j.value("backoff_base_s", cfg.backoff_base_seconds);
    cfg.credential_env = j.value("credential_env", std::string());
    if (cfg.timeout_seconds <= 0) throw ConfigError("backend timeout must be > 0");
    if (cfg.max_retries < 0) throw ConfigError("backend max_retries must be >= 0");
    return cfg;
}

BackendChoice parse_backend(const json& j, const std::string& name,
                            const std::filesystem::path& base) {
    BackendChoice choice;
    if (!j.is_object()) throw ConfigError("backends." + name + " must be an object");
    choice.type = j.value("type", std::string("mock"));
    if (choice.type == "mock") {
        reject_unknown_keys(
            j, {"type", "fixture", "seed", "dim", "mode", "table", "text", "model_id"},
            "backends." + name + ".");
        if (j.contains("fixture")) choice.fixture = resolve(base, j["fixture"].get<std::string>());
        if (j.contains("seed")) choice.seed = j["seed"].get<std::uint64_t>();
        choice.dim = j.value("dim", choice.dim);
        choice.mode = j.value("mode", choice.mode);
        if (j.contains("table")) choice.table = resolve(base, j["table"].get<std::string>());
        choice.text = j.value("text", std::string());
    } else if (choice.type == "http") {
        choice.http = parse_http(j, "backends." + name + ".");
        choice.model_id = j.value("model_id", std::string());
        choice.encoder_id = j.value("encoder_id", std::string());
        choice.dim = j.value("dim", choice.dim);
        choice.supports_text = j.value("supports_text", false);
    } else {
        throw ConfigError("backends." + name + ".type must be 'mock' or 'http'");
    }
    return choice;
}

void compute_hash(PipelineConfig& config) {
    config.semantic_hash =
        util::sha256_hex(config.file_content + "\nseed=" + std::to_string(config.seed));
}

}  // namespace

PipelineConfig load_config(const std::filesystem::path& path) {
    PipelineConfig config;
    if (path.empty()) {
        compute_hash(config);
        return config;
    }

    config.file_content = util::read_text_file(path);
    json j = json::parse(config.file_content, nullptr, false);
    if (j.is_discarded()) throw ConfigError("config is not valid JSON: " + path.string());
    if (!j.is_object()) throw ConfigError("config root must be an object");
    reject_unknown_keys(j,
                        {"data_dir", "corpus", "knowledge", "vocabulary", "index", "stages",
                         "detection", "retrieval", "thumbnail", "prompt", "backends", "sampling",
                         "output_dir", "concurrency", "seed", "evaluation"},
                        "");

    const std::filesystem::path base = path.parent_path();

    if (j.contains("data_dir")) config.data_dir = resolve(base, j["data_dir"].get<std::string>());
    if (j.contains("corpus")) {
        reject_unknown_keys(j["corpus"], {"manifest"}, "corpus.");
        if (j["corpus"].contains("manifest")) {
            config.corpus_manifest = resolve(base, j["corpus"]["manifest"].get<std::string>());
        }
    }
    if (j.contains("knowledge")) {
        reject_unknown_keys(j["knowledge"], {"manifest"}, "knowledge.");
        if (j["knowledge"].contains("manifest")) {
            config.knowledge_manifest =
                resolve(base, j["knowledge"]["manifest"].get<std::string>());
        }
    }
    if (j.contains("vocabulary")) {
        reject_unknown_keys(j["vocabulary"], {"path", "top_n"}, "vocabulary.");
        if (j["vocabulary"].contains("path")) {
            config.vocabulary_path = resolve(base, j["vocabulary"]["path"].get<std::string>());
        }
        config.vocab_top_n = j["vocabulary"].value("top_n", config.vocab_top_n);
    }
    if (j.contains("index")) {
        reject_unknown_keys(j["index"], {"path"}, "index.");
        if (j["index"].contains("path")) {
            config.index_path = resolve(base, j["index"]["path"].get<std::string>());
        }
    }
    if (j.contains("stages")) {
        reject_unknown_keys(j["stages"], {"detection", "retrieval"}, "stages.");
        if (j["stages"].contains("detection")) {
            config.stages.detection = j["stages"]["detection"].value("enabled", true);
        }
        if (j["stages"].contains("retrieval")) {
            config.stages.retrieval = j["stages"]["retrieval"].value("enabled", true);
        }
    }
    if (j.contains("detection")) {
        reject_unknown_keys(j["detection"],
                            {"min_confidence", "iou_threshold", "max_clues_per_sample",
                             "pad_fraction"},
                            "detection.");
        config.detection.min_confidence =
            j["detection"].value("min_confidence", config.detection.min_confidence);
        config.detection.iou_threshold =
            j["detection"].value("iou_threshold", config.detection.iou_threshold);
        config.detection.max_clues_per_sample =
            j["detection"].value("max_clues_per_sample", config.detection.max_clues_per_sample);
        config.detection.pad_fraction =
            j["detection"].value("pad_fraction", config.detection.pad_fraction);
    }
    if (j.contains("retrieval")) {
        reject_unknown_keys(j["retrieval"], {"k", "distinct_knowledge"}, "retrieval.");
        config.retrieval.k = j["retrieval"].value("k", config.retrieval.k);
        config.retrieval.distinct_knowledge =
            j["retrieval"].value("distinct_knowledge", config.retrieval.distinct_knowledge);
        if (config.retrieval.k < 1) throw ConfigError("retrieval.k must be >= 1");
    }
    if (j.contains("thumbnail")) {
        reject_unknown_keys(j["thumbnail"], {"max_views", "tile_edge"}, "thumbnail.");
        config.thumbnail.max_views = j["thumbnail"].value("max_views", config.thumbnail.max_views);
        config.thumbnail.tile_edge = j["thumbnail"].value("tile_edge", config.thumbnail.tile_edge);
    }
    if (j.contains("prompt")) {
        reject_unknown_keys(j["prompt"], {"template", "template_dir"}, "prompt.");
        config.template_id = j["prompt"].value("template", config.template_id);
        if (j["prompt"].contains("template_dir")) {
            config.template_dir = resolve(base, j["prompt"]["template_dir"].get<std::string>());
        }
    }
    if (j.contains("backends")) {
        reject_unknown_keys(j["backends"], {"detector", "encoder", "generator"}, "backends.");
        if (j["backends"].contains("detector")) {
            config.detector = parse_backend(j["backends"]["detector"], "detector", base);
        }
        if (j["backends"].contains("encoder")) {
            config.encoder = parse_backend(j["backends"]["encoder"], "encoder", base);
        }
        if (j["backends"].contains("generator")) {
            config.generator = parse_backend(j["backends"]["generator"], "generator", base);
        }
    }
    if (j.contains("sampling")) {
        if (!j["sampling"].is_object()) throw ConfigError("sampling must be an object");
        config.sampling = j["sampling"];
    }
    if (j.contains("output_dir")) {
        config.output_dir = resolve(base, j["output_dir"].get<std::string>());
    }
    config.concurrency = j.value("concurrency", config.concurrency);
    if (config.concurrency < 1) throw ConfigError("concurrency must be >= 1");
    config.seed = j.value("seed", config.seed);
    if (j.contains("evaluation")) {
        reject_unknown_keys(j["evaluation"], {"mode", "fuzzy_threshold", "aliases", "scale_x100"},
                            "evaluation.");
        std::string mode = j["evaluation"].value("mode", std::string("independent"));
        if (mode == "independent") {
            config.match_mode = eval::MatchMode::Independent;
        } else if (mode == "strict") {
            config.match_mode = eval::MatchMode::Strict;
        } else {
            throw ConfigError("evaluation.mode must be 'independent' or 'strict'");
        }
        config.fuzzy_threshold = j["evaluation"].value("fuzzy_threshold", config.fuzzy_threshold);
        if (j["evaluation"].contains("aliases")) {
            config.alias_table_path =
                resolve(base, j["evaluation"]["aliases"].get<std::string>());
        }
        config.scale_x100 = j["evaluation"].value("scale_x100", config.scale_x100);
    }

    compute_hash(config);
    return config;
}

void apply_seed_override(PipelineConfig& config, std::uint64_t seed) {
    config.seed = seed;
    compute_hash(config);
}

std::unique_ptr<backends::DetectorBackend> make_detector(const PipelineConfig& config) {
    if (config.detector.type == "mock") {
        if (config.detector.fixture.empty()) {
            return std::make_unique<backends::MockDetector>(backends::MockDetector::Fixture{});
        }
        return std::make_unique<backends::MockDetector>(
            backends::MockDetector::from_json_file(config.detector.fixture));
    }
    return std::make_unique<backends::RemoteDetector>(config.detector.http);
}

std::unique_ptr<backends::EncoderBackend> make_encoder(const PipelineConfig& config) {
    if (config.encoder.type == "mock") {
        std::uint64_t seed = config.encoder.seed.value_or(config.seed);
        return std::make_unique<backends::MockEncoder>(seed, config.encoder.dim);
    }
    std::string id = config.encoder.encoder_id.empty() ? config.encoder.http.endpoint
                                                       : config.encoder.encoder_id;
    return std::make_unique<backends::RemoteEncoder>(config.encoder.http, id, config.encoder.dim,
                                                     config.encoder.supports_text);
}

std::unique_ptr<backends::GeneratorBackend> make_generator(const PipelineConfig& config) {
    if (config.generator.type == "mock") {
        const std::string& mode = config.generator.mode;
        if (mode == "echo_template") {
            if (config.generator.table.empty()) {
                throw ConfigError("echo_template generator needs a table file");
            }
            return std::make_unique<backends::MockGenerator>(
                backends::MockGenerator::echo_template_from_json_file(config.generator.table));
        }
        if (mode == "fixed_text") {
            return std::make_unique<backends::MockGenerator>(
                backends::MockGenerator::fixed_text(config.generator.text));
        }
        if (mode == "script") {
            if (config.generator.table.empty()) {
                throw ConfigError("script generator needs a table file");
            }
            return std::make_unique<backends::MockGenerator>(
                backends::MockGenerator::script_from_json_file(config.generator.table));
        }
        throw ConfigError("unknown mock generator mode '" + mode + "'");
    }
    std::string model = config.generator.model_id.empty() ? "remote" : config.generator.model_id;
    return std::make_unique<backends::RemoteGenerator>(config.generator.http, model);
}

}  // namespace georeason
