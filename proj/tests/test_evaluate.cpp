// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include <doctest.h>

#include "georeason/backends/mocks.hpp"
#include "georeason/errors.hpp"
#include "georeason/eval/evaluate.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace georeason;
using reasoning::PredictionRecord;
using reasoning::PredictionStatus;

namespace {

// In-memory corpus; evaluation never touches the panorama images.
corpus::Corpus tiny_corpus() {
    corpus::Corpus c;
    const char* countries[] = {"France", "Brazil", "Japan", "Kenya", "Norway"};
    for (int i = 0; i < 5; ++i) {
        corpus::GeoSample s;
        s.id = "s" + std::to_string(i);
        s.panorama = {"a", "b", "c"};
        s.location = {countries[i], "State" + std::to_string(i), "City" + std::to_string(i),
                      "Street " + std::to_string(i)};
        s.explanations = {"the bollard and the road marking give away " +
                              std::string(countries[i]),
                          "typical " + std::string(countries[i]) + " signage"};
        s.continent = corpus::Continent::EU;
        c.samples.push_back(s);
    }
    c.index_by_id.clear();
    for (std::size_t i = 0; i < c.samples.size(); ++i) c.index_by_id[c.samples[i].id] = i;
    return c;
}

PredictionRecord oracle_prediction(const corpus::GeoSample& s) {
    PredictionRecord r;
    r.sample_id = s.id;
    r.status = PredictionStatus::Ok;
    r.location = s.location;
    r.explanation = s.explanations.front();
    r.raw_output = reasoning::format_answer(s.location, s.explanations.front());
    return r;
}

}  // namespace

TEST_CASE("evaluate_run: oracle predictions score perfectly") {
    auto corpus_data = tiny_corpus();
    std::vector<PredictionRecord> predictions;
    for (const auto& s : corpus_data.samples) predictions.push_back(oracle_prediction(s));

    eval::EvaluationOptions options;
    auto result = eval::evaluate_run(predictions, corpus_data, options);

    CHECK(result.accuracy.n == 5);
    CHECK(result.accuracy.country() == 1.0);
    CHECK(result.accuracy.state() == 1.0);
    CHECK(result.accuracy.city() == 1.0);
    CHECK(result.accuracy.street() == 1.0);
    CHECK(result.text.bleu3 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.text.bleu4 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.text.rouge_l == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.text.meteor_exact > 0.99);
    CHECK(result.text.cider > 0.0);
    REQUIRE(result.per_sample.size() == 5);
    CHECK(result.per_sample[0].match.country);
}

TEST_CASE("evaluate_run: all parse failures score zero accuracy") {
    auto corpus_data = tiny_corpus();
    std::vector<PredictionRecord> predictions;
    for (const auto& s : corpus_data.samples) {
        PredictionRecord r;
        r.sample_id = s.id;
        r.status = PredictionStatus::ParseFailure;
        r.raw_output = "garbage";
        predictions.push_back(r);
    }
    auto result = eval::evaluate_run(predictions, tiny_corpus(), {});
    CHECK(result.accuracy.country() == 0.0);
    CHECK(result.accuracy.state() == 0.0);
    CHECK(result.accuracy.city() == 0.0);
    CHECK(result.accuracy.street() == 0.0);
    CHECK(result.text.bleu3 == 0.0);
    CHECK(result.text.rouge_l == 0.0);
}

TEST_CASE("evaluate_run: five-sample mixed fixture equals the oracle scoring") {
    auto corpus_data = tiny_corpus();
    std::vector<PredictionRecord> predictions;
    // Two perfect, one wrong country, one partial text, one failed.
    predictions.push_back(oracle_prediction(corpus_data.samples[0]));
    predictions.push_back(oracle_prediction(corpus_data.samples[1]));

    PredictionRecord wrong = oracle_prediction(corpus_data.samples[2]);
    wrong.location.country = "Chile";
    wrong.explanation = "the bollard and the road marking";
    predictions.push_back(wrong);

    PredictionRecord partial = oracle_prediction(corpus_data.samples[3]);
    partial.location.state = "";
    partial.explanation = "typical signage";
    predictions.push_back(partial);

    PredictionRecord failed;
    failed.sample_id = "s4";
    failed.status = PredictionStatus::Failed;
    failed.error = "backend down";
    predictions.push_back(failed);

    auto result = eval::evaluate_run(predictions, corpus_data, {});
    CHECK(result.accuracy.country() == doctest::Approx(3.0 / 5.0));
    CHECK(result.accuracy.state() == doctest::Approx(3.0 / 5.0));
    CHECK(result.accuracy.city() == doctest::Approx(4.0 / 5.0));
    CHECK(result.accuracy.street() == doctest::Approx(4.0 / 5.0));

    // Text metrics equal the mean of independently computed per-sample
    // oracle scores.
    double bleu3_sum = 0, rouge_sum = 0, meteor_sum = 0;
    std::vector<oracle::CiderItem> cider_items;
    std::vector<std::string> cands;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const auto& s = corpus_data.samples[i];
        const auto& p = predictions[i];
        bleu3_sum += oracle::bleu(p.explanation, s.explanations, 3);
        rouge_sum += oracle::rouge_l(p.explanation, s.explanations);
        meteor_sum += oracle::meteor_exact(p.explanation, s.explanations);
        cider_items.push_back({p.explanation, s.explanations});
        cands.push_back(p.explanation);
    }
    CHECK(result.text.bleu3 == doctest::Approx(bleu3_sum / 5.0).epsilon(1e-9));
    CHECK(result.text.rouge_l == doctest::Approx(rouge_sum / 5.0).epsilon(1e-9));
    CHECK(result.text.meteor_exact == doctest::Approx(meteor_sum / 5.0).epsilon(1e-9));
    CHECK(result.text.cider == doctest::Approx(oracle::cider(cider_items)).epsilon(1e-7));
    auto [distinct1, total1] = oracle::dist_counts(cands, 1);
    CHECK(*result.text.dist1 ==
          doctest::Approx(double(distinct1) / double(total1)).epsilon(1e-12));
}

TEST_CASE("evaluate_run: join and emptiness failures") {
    auto corpus_data = tiny_corpus();
    CHECK_THROWS_AS(eval::evaluate_run({}, corpus_data, {}), EmptyEvaluationSet);

    PredictionRecord stranger;
    stranger.sample_id = "unknown-sample";
    std::vector<PredictionRecord> predictions{stranger};
    CHECK_THROWS_AS(eval::evaluate_run(predictions, corpus_data, {}), UnknownSampleId);
}

TEST_CASE("evaluate_run: optional bertscore appears only with a text-capable encoder") {
    auto corpus_data = tiny_corpus();
    std::vector<PredictionRecord> predictions{oracle_prediction(corpus_data.samples[0])};

    auto plain = eval::evaluate_run(predictions, corpus_data, {});
    CHECK_FALSE(plain.text.bertscore.has_value());

    backends::MockEncoder encoder(9, 8);
    eval::EvaluationOptions with_bert;
    with_bert.bert_encoder = &encoder;
    auto result = eval::evaluate_run(predictions, corpus_data, with_bert);
    REQUIRE(result.text.bertscore.has_value());
    CHECK(*result.text.bertscore == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("report rendering") {
    eval::AccuracyReport acc;
    acc.n = 4;
    acc.country_matched = 4;
    acc.state_matched = 2;
    acc.city_matched = 1;
    acc.street_matched = 0;

    std::string table = eval::render_accuracy_table(acc, true);
    CHECK(table.find("Country") != std::string::npos);
    CHECK(table.find("100.00") != std::string::npos);
    CHECK(table.find("50.00") != std::string::npos);

    eval::TextMetricReport text;
    text.bleu3 = 0.0893;
    text.cider = 1.043;
    text.dist1 = 0.0608;
    std::string mtable = eval::render_text_metric_table(text, true);
    CHECK(mtable.find("BLEU_3") != std::string::npos);
    CHECK(mtable.find("CIDEr[0-10]") != std::string::npos);
    CHECK(mtable.find("8.93") != std::string::npos);
    CHECK(mtable.find("1.04") != std::string::npos);  // cider stays on its native scale
    CHECK(mtable.find("6.08") != std::string::npos);
    // BERTScore column renders a dash when absent.
    CHECK(mtable.find("-") != std::string::npos);

    auto aj = eval::accuracy_to_json(acc);
    CHECK(aj["country"] == 1.0);
    CHECK(aj["n"] == 4);
    auto tj = eval::text_metrics_to_json(text);
    CHECK(tj["bleu3"] == 0.0893);
    CHECK(tj["dist2"].is_null());
}
