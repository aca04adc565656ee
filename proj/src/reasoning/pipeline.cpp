// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/reasoning/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <thread>

#include "georeason/errors.hpp"
#include "georeason/util/files.hpp"

namespace georeason::reasoning {

namespace util = georeason::util;
using nlohmann::json;

std::string_view to_string(PredictionStatus s) {
    switch (s) {
        case PredictionStatus::Ok: return "ok";
        case PredictionStatus::ParseFailure: return "parse_failure";
        case PredictionStatus::Failed: return "failed";
    }
    return "failed";
}

std::optional<PredictionStatus> prediction_status_from_string(std::string_view s) {
    if (s == "ok") return PredictionStatus::Ok;
    if (s == "parse_failure") return PredictionStatus::ParseFailure;
    if (s == "failed") return PredictionStatus::Failed;
    return std::nullopt;
}

json prediction_to_json(const PredictionRecord& r) {
    json j;
    j["sample_id"] = r.sample_id;
    j["status"] = std::string(to_string(r.status));
    j["location"] = {{"country", r.location.country},
                     {"state", r.location.state},
                     {"city", r.location.city},
                     {"street", r.location.street}};
    j["explanation"] = r.explanation;
    j["raw_output"] = r.raw_output;
    if (!r.error.empty()) j["error"] = r.error;
    j["provenance"] = {{"clue_ids", r.provenance.clue_ids},
                       {"knowledge_ids", r.provenance.knowledge_ids},
                       {"model_id", r.provenance.model_id},
                       {"config_hash", r.provenance.config_hash}};
    return j;
}

PredictionRecord prediction_from_json(const json& j) {
    PredictionRecord r;
    r.sample_id = j.at("sample_id").get<std::string>();
    auto status = prediction_status_from_string(j.at("status").get<std::string>());
    if (!status) throw Error("unknown prediction status in results file");
    r.status = *status;
    const json& loc = j.at("location");
    r.location.country = loc.value("country", "");
    r.location.state = loc.value("state", "");
    r.location.city = loc.value("city", "");
    r.location.street = loc.value("street", "");
    r.explanation = j.value("explanation", "");
    r.raw_output = j.value("raw_output", "");
    r.error = j.value("error", "");
    if (j.contains("provenance")) {
        const json& p = j["provenance"];
        r.provenance.clue_ids = p.value("clue_ids", std::vector<std::string>{});
        r.provenance.knowledge_ids = p.value("knowledge_ids", std::vector<std::string>{});
        r.provenance.model_id = p.value("model_id", "");
        r.provenance.config_hash = p.value("config_hash", "");
    }
    return r;
}

std::vector<PredictionRecord> load_results_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open results file: " + path.string());
    std::vector<PredictionRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            throw Error("invalid JSON on results line " + std::to_string(line_no));
        }
        out.push_back(prediction_from_json(j));
    }
    return out;
}

void save_results_file(std::span<const PredictionRecord> records,
                       const std::filesystem::path& path) {
    std::string out;
    for (const PredictionRecord& r : records) {
        out += prediction_to_json(r).dump();
        out += '\n';
    }
    util::write_text_file(path, out);
}

Pipeline::Pipeline(const corpus::Corpus& corpus, const corpus::KnowledgeBase* kb,
                   const retrieval::KnowledgeIndex* index,
                   clues::DetectionPromptVocabulary vocabulary, TemplateRegistry templates,
                   PipelineOptions options, PipelineBackends backends)
    : corpus_(corpus), kb_(kb), index_(index), vocabulary_(std::move(vocabulary)),
      templates_(std::move(templates)), options_(std::move(options)), backends_(backends) {
    // Configuration problems are fatal here, before any sample runs.
    templates_.text(options_.template_id);
    if (backends_.generator == nullptr) throw ConfigError("generator backend is required");
    if (options_.stages.detection && backends_.detector == nullptr) {
        throw ConfigError("detection stage enabled but no detector backend configured");
    }
    if (options_.stages.retrieval) {
        if (index_ == nullptr) throw ConfigError("retrieval stage enabled but no index loaded");
        if (kb_ == nullptr) {
            throw ConfigError("retrieval stage enabled but no knowledge base loaded");
        }
        if (backends_.encoder == nullptr) {
            throw ConfigError("retrieval stage enabled but no encoder backend configured");
        }
    }
    if (options_.retrieval.k < 1) throw ConfigError("retrieval k must be >= 1");
}

PredictionRecord Pipeline::run_sample(const corpus::GeoSample& sample) const {
    try {
        return run_sample_inner(sample);
    } catch (const Error& e) {
        // Stage-level failure: the record carries the error chain, the batch
        // carries on.
        PredictionRecord record;
        record.sample_id = sample.id;
        record.status = PredictionStatus::Failed;
        record.error = e.what();
        record.provenance.model_id =
            backends_.generator != nullptr ? backends_.generator->model_id() : "";
        record.provenance.config_hash = options_.config_hash;
        return record;
    }
}

PredictionRecord Pipeline::run_sample_inner(const corpus::GeoSample& sample) const {
    PredictionRecord record;
    record.sample_id = sample.id;
    record.provenance.model_id = backends_.generator->model_id();
    record.provenance.config_hash = options_.config_hash;

    // Global context for every mode.
    auto thumbnail_path = make_thumbnail(sample.panorama, corpus_.image_root, options_.thumbnail,
                                         sample.id, options_.work_dir / "thumbnails");

    // Stage 1: visual clue detection.
    std::vector<clues::VisualClue> clue_list;
    if (options_.stages.detection) {
        clue_list = clues::detect_clues(sample.id, sample.panorama, corpus_.image_root,
                                        vocabulary_, *backends_.detector, options_.detection,
                                        options_.work_dir / "crops");
    }

    // Stage 2: multimodal knowledge retrieval over the detected clues.
    retrieval::RetrievalResult retrieved;
    if (options_.stages.retrieval && !clue_list.empty()) {
        retrieved = retrieval::retrieve_topk(*index_, *kb_, clue_list, *backends_.encoder,
                                             options_.retrieval);
    }

    // Which crops accompany the thumbnail: the retrieval-selected clues in
    // pair order, or, with retrieval disabled, the k most confident
    // detections.
    std::vector<std::string> crop_refs;
    if (options_.stages.retrieval) {
        std::map<std::string, std::string> crops_by_id;
        for (const clues::VisualClue& c : clue_list) {
            crops_by_id[c.id] = c.crop_path.string();
        }
        for (const std::string& clue_id : retrieved.clue_ids) {
            crop_refs.push_back(crops_by_id.at(clue_id));
            record.provenance.clue_ids.push_back(clue_id);
        }
        record.provenance.knowledge_ids.assign(retrieved.pairs.size(), "");
        for (std::size_t i = 0; i < retrieved.pairs.size(); ++i) {
            record.provenance.knowledge_ids[i] = retrieved.pairs[i].knowledge_id;
        }
    } else if (!clue_list.empty()) {
        std::vector<const clues::VisualClue*> by_confidence;
        for (const clues::VisualClue& c : clue_list) by_confidence.push_back(&c);
        std::stable_sort(by_confidence.begin(), by_confidence.end(),
                         [](const auto* a, const auto* b) { return a->confidence > b->confidence; });
        std::size_t take = std::min<std::size_t>(by_confidence.size(),
                                                 static_cast<std::size_t>(options_.retrieval.k));
        by_confidence.resize(take);
        for (const clues::VisualClue* c : by_confidence) {
            crop_refs.push_back(c->crop_path.string());
            record.provenance.clue_ids.push_back(c->id);
        }
    }

    auto [image_prompt, text_prompt] = assemble_prompt(
        thumbnail_path.string(), crop_refs, retrieved.snippets, templates_, options_.template_id);

    // Stage 3: reasoning generation.
    backends::GeneratorRequest request;
    request.sample_id = sample.id;
    request.sampling_options = options_.sampling_options;
    request.text = text_prompt.instruction;
    request.images.push_back(util::read_binary_file(image_prompt.thumbnail));
    for (const std::string& crop : image_prompt.clue_images) {
        request.images.push_back(util::read_binary_file(crop));
    }
    record.raw_output = backends_.generator->generate(request);

    ParsedAnswer parsed = parse_answer(record.raw_output);
    if (parsed.ok) {
        record.status = PredictionStatus::Ok;
        record.location = parsed.location;
        record.explanation = parsed.explanation;
    } else {
        // Soft failure: the raw output is preserved and the record scores as
        // all-fields-unmatched.
        record.status = PredictionStatus::ParseFailure;
    }
    return record;
}

std::vector<PredictionRecord> Pipeline::run_all(std::size_t concurrency) const {
    const std::size_t n = corpus_.samples.size();
    std::vector<PredictionRecord> records(n);
    if (n == 0) return records;
    std::size_t workers = std::max<std::size_t>(1, std::min(concurrency, n));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            records[i] = run_sample(corpus_.samples[i]);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return records;
}

}  // namespace georeason::reasoning
