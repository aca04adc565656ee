// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "georeason/eval/match.hpp"
#include "georeason/eval/metrics.hpp"
#include "georeason/reasoning/pipeline.hpp"

namespace georeason::eval {

// Corpus-level text metrics. BLEU/ROUGE/METEOR are means of per-sample
// sentence scores; CIDEr is corpus-level by construction; Dist-n runs over
// the pooled candidate explanations. Values stay in their natural ranges
// ([0,1]; CIDEr [0,10]); presentation scaling happens in the report layer.
struct TextMetricReport {
    double bleu3 = 0.0;
    double bleu4 = 0.0;
    double rouge_l = 0.0;
    double cider = 0.0;
    double meteor_exact = 0.0;
    std::optional<double> dist1;
    std::optional<double> dist2;
    std::optional<double> bertscore;  // present only with a text-capable encoder
};

struct PerSampleEval {
    std::string sample_id;
    reasoning::PredictionStatus status = reasoning::PredictionStatus::Failed;
    MatchResult match;
    double bleu3 = 0.0;
    double bleu4 = 0.0;
    double rouge_l = 0.0;
    double meteor_exact = 0.0;
    std::optional<double> bertscore;
};

struct EvaluationOptions {
    MatchMode mode = MatchMode::Independent;
    double fuzzy_threshold = kDefaultFuzzyThreshold;
    AliasTable aliases = AliasTable::empty();
    backends::EncoderBackend* bert_encoder = nullptr;  // optional BERTScore
};

struct EvaluationResult {
    AccuracyReport accuracy;
    TextMetricReport text;
    std::vector<PerSampleEval> per_sample;
};

// Joins each prediction to its corpus sample (the sample's explanation list
// is the multi-reference set) and scores location accuracy plus all text
// metrics. Throws UnknownSampleId on a missing join and EmptyEvaluationSet
// on empty input.
EvaluationResult evaluate_run(std::span<const reasoning::PredictionRecord> predictions,
                              const corpus::Corpus& corpus, const EvaluationOptions& options);

// --- report rendering -------------------------------------------------------

// Aligned accuracy table (Country/State/City/Street columns) and metric
// table (BLEU_3 BLEU_4 ROUGE_L CIDEr METEOR ...). scale_x100 multiplies
// [0,1] metrics by 100 for presentation; CIDEr keeps its native 0-10 scale
// and is labeled with it.
std::string render_accuracy_table(const AccuracyReport& report, bool scale_x100);
std::string render_text_metric_table(const TextMetricReport& report, bool scale_x100);

nlohmann::json accuracy_to_json(const AccuracyReport& report);
nlohmann::json text_metrics_to_json(const TextMetricReport& report);
nlohmann::json per_sample_to_json(const PerSampleEval& detail);

}  // namespace georeason::eval
