// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "georeason/backends/contracts.hpp"
#include "georeason/clues/detect.hpp"
#include "georeason/corpus/types.hpp"
#include "georeason/reasoning/parse.hpp"
#include "georeason/reasoning/prompt.hpp"
#include "georeason/reasoning/thumbnail.hpp"
#include "georeason/retrieval/index.hpp"
#include "georeason/retrieval/topk.hpp"

namespace georeason::reasoning {

enum class PredictionStatus { Ok, ParseFailure, Failed };

std::string_view to_string(PredictionStatus s);
std::optional<PredictionStatus> prediction_status_from_string(std::string_view s);

struct PredictionProvenance {
    std::vector<std::string> clue_ids;       // clue crops shown to the generator
    std::vector<std::string> knowledge_ids;  // knowledge snippets shown to the generator
    std::string model_id;
    std::string config_hash;

    bool operator==(const PredictionProvenance&) const = default;
};

struct PredictionRecord {
    std::string sample_id;
    PredictionStatus status = PredictionStatus::Failed;
    corpus::LocationLabel location;  // empty fields when unparsed
    std::string explanation;
    std::string raw_output;  // generator output verbatim, always preserved
    std::string error;       // failure chain when status == Failed
    PredictionProvenance provenance;

    bool operator==(const PredictionRecord&) const = default;
};

nlohmann::json prediction_to_json(const PredictionRecord& record);
PredictionRecord prediction_from_json(const nlohmann::json& j);

std::vector<PredictionRecord> load_results_file(const std::filesystem::path& path);
void save_results_file(std::span<const PredictionRecord> records,
                       const std::filesystem::path& path);

// Stage toggles realizing the three ablation modes: detection+retrieval on
// is the full pipeline, retrieval off keeps the detected clues in the prompt
// but drops external knowledge, detection off degrades to a thumbnail-only
// prompt.
struct PipelineStages {
    bool detection = true;
    bool retrieval = true;
};

struct PipelineOptions {
    PipelineStages stages;
    clues::DetectionParams detection;
    retrieval::RetrieveOptions retrieval;
    ThumbnailParams thumbnail;
    std::string template_id = "default";
    std::string config_hash;
    nlohmann::json sampling_options = nlohmann::json::object();
    std::filesystem::path work_dir;  // thumbnails/ and crops/ are created here
};

struct PipelineBackends {
    backends::DetectorBackend* detector = nullptr;
    backends::EncoderBackend* encoder = nullptr;
    backends::GeneratorBackend* generator = nullptr;
};

// Per-sample three-stage execution over a loaded corpus. Construction fails
// fast on configuration problems (missing template, missing index while
// retrieval is enabled); per-sample failures are captured in the record and
// never abort a batch.
class Pipeline {
public:
    Pipeline(const corpus::Corpus& corpus, const corpus::KnowledgeBase* kb,
             const retrieval::KnowledgeIndex* index, clues::DetectionPromptVocabulary vocabulary,
             TemplateRegistry templates, PipelineOptions options, PipelineBackends backends);

    PredictionRecord run_sample(const corpus::GeoSample& sample) const;

    // Bounded worker pool; records come back in corpus order regardless of
    // completion order, so output bytes do not depend on the concurrency.
    std::vector<PredictionRecord> run_all(std::size_t concurrency) const;

private:
    PredictionRecord run_sample_inner(const corpus::GeoSample& sample) const;

    const corpus::Corpus& corpus_;
    const corpus::KnowledgeBase* kb_;
    const retrieval::KnowledgeIndex* index_;
    clues::DetectionPromptVocabulary vocabulary_;
    TemplateRegistry templates_;
    PipelineOptions options_;
    PipelineBackends backends_;
};

}  // namespace georeason::reasoning
