// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/eval/evaluate.hpp"

#include <cstdio>

#include "georeason/errors.hpp"

namespace georeason::eval {

using nlohmann::json;

EvaluationResult evaluate_run(std::span<const reasoning::PredictionRecord> predictions,
                              const corpus::Corpus& corpus, const EvaluationOptions& options) {
    if (predictions.empty()) throw EmptyEvaluationSet("no predictions to evaluate");

    EvaluationResult result;
    std::vector<MatchResult> matches;
    std::vector<CiderItem> cider_corpus;
    std::vector<std::string> all_candidates;
    matches.reserve(predictions.size());
    cider_corpus.reserve(predictions.size());

    double bleu3_sum = 0.0;
    double bleu4_sum = 0.0;
    double rouge_sum = 0.0;
    double meteor_sum = 0.0;
    double bert_sum = 0.0;
    bool bert_available = options.bert_encoder != nullptr &&
                          options.bert_encoder->supports_text_tokens();

    for (const reasoning::PredictionRecord& pred : predictions) {
        const corpus::GeoSample* sample = corpus.find(pred.sample_id);
        if (sample == nullptr) {
            throw UnknownSampleId("prediction for unknown sample '" + pred.sample_id + "'");
        }
        const std::vector<std::string>& references = sample->explanations;

        PerSampleEval detail;
        detail.sample_id = pred.sample_id;
        detail.status = pred.status;
        detail.match = match_location(pred.location, sample->location, options.aliases,
                                      options.mode, options.fuzzy_threshold);
        detail.bleu3 = bleu_n(pred.explanation, references, 3);
        detail.bleu4 = bleu_n(pred.explanation, references, 4);
        detail.rouge_l = rouge_l(pred.explanation, references);
        detail.meteor_exact = meteor_exact(pred.explanation, references);
        if (bert_available) {
            detail.bertscore = bertscore_f1(pred.explanation, references, *options.bert_encoder);
        }

        matches.push_back(detail.match);
        cider_corpus.push_back({pred.explanation, references});
        all_candidates.push_back(pred.explanation);

        bleu3_sum += detail.bleu3;
        bleu4_sum += detail.bleu4;
        rouge_sum += detail.rouge_l;
        meteor_sum += detail.meteor_exact;
        if (detail.bertscore) bert_sum += *detail.bertscore;

        result.per_sample.push_back(std::move(detail));
    }

    result.accuracy = accuracy(matches);

    const double n = static_cast<double>(predictions.size());
    result.text.bleu3 = bleu3_sum / n;
    result.text.bleu4 = bleu4_sum / n;
    result.text.rouge_l = rouge_sum / n;
    result.text.meteor_exact = meteor_sum / n;
    result.text.cider = cider(cider_corpus);
    result.text.dist1 = dist_n(all_candidates, 1);
    result.text.dist2 = dist_n(all_candidates, 2);
    if (bert_available) result.text.bertscore = bert_sum / n;
    return result;
}

namespace {

std::string fmt(double value, bool scale_x100) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", scale_x100 ? value * 100.0 : value);
    return buf;
}

std::string fmt_opt(const std::optional<double>& value, bool scale_x100) {
    return value ? fmt(*value, scale_x100) : std::string("-");
}

std::string render_row(const std::vector<std::string>& cells, const std::vector<int>& widths) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%-*s", widths[i], cells[i].c_str());
        out += buf;
        if (i + 1 < cells.size()) out += "  ";
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
    return out;
}

}  // namespace

std::string render_accuracy_table(const AccuracyReport& report, bool scale_x100) {
    std::vector<int> widths{9, 9, 9, 9, 6};
    std::string out;
    out += render_row({"Country", "State", "City", "Street", "N"}, widths);
    out += render_row({fmt(report.country(), scale_x100), fmt(report.state(), scale_x100),
                       fmt(report.city(), scale_x100), fmt(report.street(), scale_x100),
                       std::to_string(report.n)},
                      widths);
    return out;
}

std::string render_text_metric_table(const TextMetricReport& report, bool scale_x100) {
    std::vector<int> widths{8, 8, 8, 12, 12, 10, 11, 11};
    std::string out;
    out += render_row({"BLEU_3", "BLEU_4", "ROUGE_L", "CIDEr[0-10]", "METEOR_exact", "BERTScore",
                       "distinct_1", "distinct_2"},
                      widths);
    out += render_row({fmt(report.bleu3, scale_x100), fmt(report.bleu4, scale_x100),
                       fmt(report.rouge_l, scale_x100), fmt(report.cider, false),
                       fmt(report.meteor_exact, scale_x100),
                       fmt_opt(report.bertscore, scale_x100), fmt_opt(report.dist1, scale_x100),
                       fmt_opt(report.dist2, scale_x100)},
                      widths);
    return out;
}

json accuracy_to_json(const AccuracyReport& report) {
    json j;
    j["kind"] = "accuracy";
    j["n"] = report.n;
    j["country"] = report.country();
    j["state"] = report.state();
    j["city"] = report.city();
    j["street"] = report.street();
    j["matched"] = {{"country", report.country_matched},
                    {"state", report.state_matched},
                    {"city", report.city_matched},
                    {"street", report.street_matched}};
    return j;
}

json text_metrics_to_json(const TextMetricReport& report) {
    json j;
    j["kind"] = "text_metrics";
    j["scale"] = "unit";  // values in [0,1]; cider in [0,10]
    j["bleu3"] = report.bleu3;
    j["bleu4"] = report.bleu4;
    j["rouge_l"] = report.rouge_l;
    j["cider"] = report.cider;
    j["meteor_exact"] = report.meteor_exact;
    j["dist1"] = report.dist1 ? json(*report.dist1) : json();
    j["dist2"] = report.dist2 ? json(*report.dist2) : json();
    if (report.bertscore) j["bertscore"] = *report.bertscore;
    return j;
}

json per_sample_to_json(const PerSampleEval& d) {
    json j;
    j["sample_id"] = d.sample_id;
    j["status"] = std::string(reasoning::to_string(d.status));
    j["match"] = {{"country", d.match.country},
                  {"state", d.match.state},
                  {"city", d.match.city},
                  {"street", d.match.street}};
    j["bleu3"] = d.bleu3;
    j["bleu4"] = d.bleu4;
    j["rouge_l"] = d.rouge_l;
    j["meteor_exact"] = d.meteor_exact;
    if (d.bertscore) j["bertscore"] = *d.bertscore;
    return j;
}

}  // namespace georeason::eval
