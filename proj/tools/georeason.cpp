// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

// Operator CLI: ingest corpora, build detection vocabularies and knowledge
// indices, run the three-stage pipeline in any ablation mode, and score the
// results. Exit codes: 0 success, 1 configuration error, 2 data/validation
// error, 3 backend or I/O error.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "georeason/config.hpp"
#include "georeason/corpus/manifest.hpp"
#include "georeason/corpus/stats.hpp"
#include "georeason/errors.hpp"
#include "georeason/eval/evaluate.hpp"
#include "georeason/retrieval/index.hpp"
#include "georeason/util/files.hpp"

namespace {

using namespace georeason;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitData = 2;
constexpr int kExitBackendIo = 3;

struct GlobalArgs {
    std::string config_path;
    std::string output_dir;
    std::size_t concurrency = 0;  // 0 = leave config value
    std::int64_t seed = -1;       // <0 = leave config value
};

PipelineConfig effective_config(const GlobalArgs& args) {
    PipelineConfig config = load_config(args.config_path);
    if (!args.output_dir.empty()) config.output_dir = args.output_dir;
    if (args.concurrency > 0) config.concurrency = args.concurrency;
    if (args.seed >= 0) apply_seed_override(config, static_cast<std::uint64_t>(args.seed));
    return config;
}

int classify(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const UnknownTemplate*>(&e)) {
        return kExitConfig;
    }
    if (dynamic_cast<const SchemaViolation*>(&e) || dynamic_cast<const DuplicateId*>(&e) ||
        dynamic_cast<const UnknownSampleId*>(&e) || dynamic_cast<const EmptyEvaluationSet*>(&e)) {
        return kExitData;
    }
    return kExitBackendIo;
}

corpus::ExplanationFilters load_filters(const PipelineConfig& config) {
    return corpus::ExplanationFilters::load(config.data_dir);
}

// --- ingest -----------------------------------------------------------------

int cmd_ingest(const GlobalArgs& globals, const std::string& corpus_path,
               const std::string& out_path, int min_score, const std::string& stats_out) {
    PipelineConfig config = effective_config(globals);
    std::filesystem::path manifest =
        corpus_path.empty() ? config.corpus_manifest : std::filesystem::path(corpus_path);
    if (manifest.empty()) throw ConfigError("ingest needs a corpus manifest (--corpus)");

    auto filters = load_filters(config);
    corpus::IngestReport report = corpus::ingest_corpus(manifest, filters, min_score);

    std::filesystem::create_directories(config.output_dir);
    std::filesystem::path cleaned =
        out_path.empty() ? config.output_dir / "corpus.clean.jsonl"
                         : std::filesystem::path(out_path);
    if (!cleaned.parent_path().empty()) {
        std::filesystem::create_directories(cleaned.parent_path());
    }
    corpus::save_corpus(report.corpus, cleaned);

    std::string issues_text;
    for (const corpus::RecordIssue& issue : report.issues) {
        json j;
        j["record_index"] = issue.record_index;
        j["id"] = issue.id;
        j["reason"] = issue.reason;
        issues_text += j.dump();
        issues_text += '\n';
    }
    util::write_text_file(config.output_dir / "ingest_report.jsonl", issues_text);

    corpus::CorpusStats stats = corpus::corpus_stats(report.corpus);
    std::cout << corpus::render_stats_table(stats);
    std::cout << "records: " << report.records_seen << " seen, " << report.corpus.samples.size()
              << " kept, " << report.issues.size() << " rejected\n";
    std::cout << "explanations: " << report.explanations_seen << " seen, "
              << report.explanations_kept << " kept\n";
    std::cout << "cleaned corpus: " << cleaned.string() << "\n";
    for (const corpus::RecordIssue& issue : report.issues) {
        std::cout << "violation: record " << issue.record_index
                  << (issue.id.empty() ? "" : " (" + issue.id + ")") << ": " << issue.reason
                  << "\n";
    }

    if (!stats_out.empty()) {
        json j;
        j["locations"] = stats.location_count;
        j["panorama_images"] = stats.panorama_image_count;
        j["explanations"] = stats.explanation_count;
        if (stats.mean_panoramas_per_location) {
            j["mean_panoramas_per_location"] = *stats.mean_panoramas_per_location;
            j["min_panoramas_per_location"] = stats.min_panoramas;
            j["max_panoramas_per_location"] = stats.max_panoramas;
        }
        json per_continent = json::object();
        for (const auto& [continent, count] : stats.per_continent) {
            per_continent[std::string(corpus::to_string(continent))] = count;
        }
        j["per_continent"] = per_continent;
        util::write_text_file(stats_out, j.dump(2) + "\n");
    }

    return report.issues.empty() ? kExitOk : kExitData;
}

// --- vocab ------------------------------------------------------------------

int cmd_vocab(const GlobalArgs& globals, const std::string& corpus_path,
              const std::string& knowledge_path, std::size_t top_n, const std::string& out_path) {
    PipelineConfig config = effective_config(globals);
    std::filesystem::path manifest =
        corpus_path.empty() ? config.corpus_manifest : std::filesystem::path(corpus_path);
    if (manifest.empty()) throw ConfigError("vocab needs a corpus manifest (--corpus)");

    corpus::Corpus loaded = corpus::load_corpus(manifest);
    std::vector<std::string> explanations;
    for (const corpus::GeoSample& s : loaded.samples) {
        explanations.insert(explanations.end(), s.explanations.begin(), s.explanations.end());
    }
    std::vector<std::string> snippets;
    std::filesystem::path km =
        knowledge_path.empty() ? config.knowledge_manifest : std::filesystem::path(knowledge_path);
    if (!km.empty()) {
        corpus::KnowledgeBase kb = corpus::load_knowledge(km);
        for (const corpus::KnowledgeEntry& e : kb.entries) snippets.push_back(e.snippet);
    }

    auto stoplist = clues::TermStoplist::load(config.data_dir / "vocab_stoplist.txt");
    auto vocabulary = clues::build_prompt_vocabulary(explanations, snippets, top_n, stoplist);

    std::filesystem::create_directories(config.output_dir);
    std::filesystem::path out = out_path.empty() ? config.output_dir / "vocabulary.txt"
                                                 : std::filesystem::path(out_path);
    clues::save_vocabulary(vocabulary, out);
    std::cout << "vocabulary: " << vocabulary.terms.size() << " terms -> " << out.string()
              << "\n";
    std::cout << "source_hash: " << vocabulary.source_hash << "\n";
    return kExitOk;
}

// --- index ------------------------------------------------------------------

int cmd_index(const GlobalArgs& globals, const std::string& knowledge_path,
              const std::string& out_path, const std::string& encoder_endpoint) {
    PipelineConfig config = effective_config(globals);
    std::filesystem::path manifest = knowledge_path.empty()
                                         ? config.knowledge_manifest
                                         : std::filesystem::path(knowledge_path);
    if (manifest.empty()) throw ConfigError("index needs a knowledge manifest (--knowledge)");
    if (!encoder_endpoint.empty()) {
        config.encoder.type = "http";
        config.encoder.http.endpoint = encoder_endpoint;
    }

    corpus::KnowledgeBase kb = corpus::load_knowledge(manifest);
    auto encoder = make_encoder(config);
    retrieval::KnowledgeIndex index = retrieval::build_index(kb, *encoder);

    std::filesystem::path out = out_path.empty()
                                    ? (config.index_path.empty()
                                           ? config.output_dir / "knowledge.idx"
                                           : config.index_path)
                                    : std::filesystem::path(out_path);
    if (!out.parent_path().empty()) std::filesystem::create_directories(out.parent_path());
    retrieval::save_index(index, out);
    std::cout << "index: " << index.entries.size() << " entries, dim " << index.dim << " -> "
              << out.string() << "\n";
    return kExitOk;
}

// --- run --------------------------------------------------------------------

int cmd_run(const GlobalArgs& globals, const std::string& results_path) {
    PipelineConfig config = effective_config(globals);
    if (config.corpus_manifest.empty()) {
        throw ConfigError("run needs corpus.manifest in the config");
    }

    corpus::Corpus loaded = corpus::load_corpus(config.corpus_manifest);

    std::optional<corpus::KnowledgeBase> kb;
    std::optional<retrieval::KnowledgeIndex> index;
    if (config.stages.retrieval) {
        if (config.knowledge_manifest.empty()) {
            throw ConfigError("retrieval stage enabled but knowledge.manifest is missing");
        }
        if (config.index_path.empty()) {
            throw ConfigError("retrieval stage enabled but index.path is missing");
        }
        kb = corpus::load_knowledge(config.knowledge_manifest);
        index = retrieval::load_index(config.index_path);
    }

    clues::DetectionPromptVocabulary vocabulary;
    if (config.stages.detection) {
        if (!config.vocabulary_path.empty()) {
            vocabulary = clues::load_vocabulary(config.vocabulary_path);
        } else if (config.vocab_top_n > 0) {
            std::vector<std::string> explanations;
            for (const corpus::GeoSample& s : loaded.samples) {
                explanations.insert(explanations.end(), s.explanations.begin(),
                                    s.explanations.end());
            }
            std::vector<std::string> snippets;
            if (kb) {
                for (const corpus::KnowledgeEntry& e : kb->entries) snippets.push_back(e.snippet);
            }
            auto stoplist = clues::TermStoplist::load(config.data_dir / "vocab_stoplist.txt");
            vocabulary =
                clues::build_prompt_vocabulary(explanations, snippets, config.vocab_top_n, stoplist);
        } else {
            vocabulary = clues::load_vocabulary(config.data_dir / "default_vocabulary.txt");
        }
    }

    reasoning::TemplateRegistry templates = config.template_dir.empty()
                                                ? reasoning::TemplateRegistry::builtin()
                                                : reasoning::TemplateRegistry::load_dir(
                                                      config.template_dir);

    auto detector = config.stages.detection ? make_detector(config) : nullptr;
    auto encoder = config.stages.retrieval ? make_encoder(config) : nullptr;
    auto generator = make_generator(config);

    reasoning::PipelineOptions options;
    options.stages = config.stages;
    options.detection = config.detection;
    options.retrieval = config.retrieval;
    options.thumbnail = config.thumbnail;
    options.template_id = config.template_id;
    options.config_hash = config.semantic_hash;
    options.sampling_options = config.sampling;
    options.work_dir = config.output_dir / "work";
    std::filesystem::create_directories(options.work_dir);

    reasoning::PipelineBackends backend_ptrs;
    backend_ptrs.detector = detector.get();
    backend_ptrs.encoder = encoder.get();
    backend_ptrs.generator = generator.get();

    reasoning::Pipeline pipeline(loaded, kb ? &*kb : nullptr, index ? &*index : nullptr,
                                 std::move(vocabulary), std::move(templates), std::move(options),
                                 backend_ptrs);
    auto records = pipeline.run_all(config.concurrency);

    std::filesystem::path results = results_path.empty() ? config.output_dir / "results.jsonl"
                                                         : std::filesystem::path(results_path);
    if (!results.parent_path().empty()) {
        std::filesystem::create_directories(results.parent_path());
    }
    reasoning::save_results_file(records, results);

    std::size_t ok = 0, parse_fail = 0, failed = 0;
    for (const auto& r : records) {
        switch (r.status) {
            case reasoning::PredictionStatus::Ok: ++ok; break;
            case reasoning::PredictionStatus::ParseFailure: ++parse_fail; break;
            case reasoning::PredictionStatus::Failed: ++failed; break;
        }
    }
    std::cout << "results: " << records.size() << " records -> " << results.string() << "\n";
    std::cout << "status: " << ok << " ok, " << parse_fail << " parse failures, " << failed
              << " failed\n";
    if (failed > 0) {
        std::cout << "warning: " << failed << " records carry backend failures; see the "
                  << "'error' field\n";
    }
    if (records.empty()) {
        std::cout << "error: the corpus produced no records\n";
        return kExitData;
    }
    return kExitOk;
}

// --- evaluate -----------------------------------------------------------------

int cmd_evaluate(const GlobalArgs& globals, const std::string& results_path,
                 const std::string& corpus_path) {
    PipelineConfig config = effective_config(globals);
    std::filesystem::path results = results_path.empty() ? config.output_dir / "results.jsonl"
                                                         : std::filesystem::path(results_path);
    std::filesystem::path manifest =
        corpus_path.empty() ? config.corpus_manifest : std::filesystem::path(corpus_path);
    if (manifest.empty()) throw ConfigError("evaluate needs a corpus manifest");

    corpus::Corpus loaded = corpus::load_corpus(manifest);
    auto predictions = reasoning::load_results_file(results);

    eval::EvaluationOptions options;
    options.mode = config.match_mode;
    options.fuzzy_threshold = config.fuzzy_threshold;
    std::filesystem::path aliases = config.alias_table_path.empty()
                                        ? config.data_dir / "country_aliases.txt"
                                        : config.alias_table_path;
    if (std::filesystem::exists(aliases)) {
        options.aliases = eval::AliasTable::load(aliases);
    }
    std::unique_ptr<backends::EncoderBackend> bert_encoder;
    if (config.encoder.type == "mock" || config.encoder.supports_text) {
        bert_encoder = make_encoder(config);
        if (bert_encoder->supports_text_tokens()) options.bert_encoder = bert_encoder.get();
    }

    eval::EvaluationResult result = eval::evaluate_run(predictions, loaded, options);

    std::filesystem::create_directories(config.output_dir);
    std::string report_lines = eval::accuracy_to_json(result.accuracy).dump() + "\n" +
                               eval::text_metrics_to_json(result.text).dump() + "\n";
    util::write_text_file(config.output_dir / "evaluation_report.jsonl", report_lines);
    std::string details;
    for (const eval::PerSampleEval& d : result.per_sample) {
        details += eval::per_sample_to_json(d).dump();
        details += '\n';
    }
    util::write_text_file(config.output_dir / "per_sample.jsonl", details);

    std::string tables = "Location accuracy" +
                         std::string(config.scale_x100 ? " (x100)" : "") + "\n" +
                         eval::render_accuracy_table(result.accuracy, config.scale_x100) + "\n" +
                         "Explanation metrics" +
                         std::string(config.scale_x100 ? " (x100, CIDEr on its native 0-10 scale)"
                                                       : "") +
                         "\n" + eval::render_text_metric_table(result.text, config.scale_x100);
    util::write_text_file(config.output_dir / "report.txt", tables);
    std::cout << tables;
    std::cout << "reports: " << (config.output_dir / "evaluation_report.jsonl").string() << ", "
              << (config.output_dir / "per_sample.jsonl").string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"street-view geolocation reasoning pipeline"};
    app.require_subcommand(1);

    GlobalArgs globals;
    app.add_option("--config", globals.config_path, "pipeline config file (JSON)");
    app.add_option("--output-dir", globals.output_dir, "override the configured output directory");
    app.add_option("--concurrency", globals.concurrency, "worker pool size");
    app.add_option("--seed", globals.seed, "override the configured random seed");

    auto* ingest = app.add_subcommand("ingest", "validate and filter a raw corpus manifest");
    std::string ingest_corpus, ingest_out, ingest_stats;
    int ingest_min_score = corpus::kDefaultMinScore;
    ingest->add_option("--corpus", ingest_corpus, "raw corpus manifest");
    ingest->add_option("--out", ingest_out, "cleaned corpus manifest path");
    ingest->add_option("--min-score", ingest_min_score, "minimum explanation game score");
    ingest->add_option("--stats-out", ingest_stats, "write corpus statistics JSON here");

    auto* vocab = app.add_subcommand("vocab", "derive a detection vocabulary from corpus text");
    std::string vocab_corpus, vocab_knowledge, vocab_out;
    std::size_t vocab_top_n = 40;
    vocab->add_option("--corpus", vocab_corpus, "cleaned corpus manifest");
    vocab->add_option("--knowledge", vocab_knowledge, "knowledge manifest (snippets)");
    vocab->add_option("--top-n", vocab_top_n, "number of terms to keep");
    vocab->add_option("--out", vocab_out, "vocabulary file path");

    auto* index = app.add_subcommand("index", "embed knowledge images and save the index");
    std::string index_knowledge, index_out, index_endpoint;
    index->add_option("--knowledge", index_knowledge, "knowledge manifest");
    index->add_option("--out", index_out, "index file path");
    index->add_option("--encoder-endpoint", index_endpoint, "HTTP encoder endpoint");

    auto* run = app.add_subcommand("run", "run the three-stage pipeline over the corpus");
    std::string run_results;
    run->add_option("--results", run_results, "results file path");

    auto* evaluate = app.add_subcommand("evaluate", "score a results file against the corpus");
    std::string eval_results, eval_corpus;
    evaluate->add_option("--results", eval_results, "results file (one record per line)");
    evaluate->add_option("--corpus", eval_corpus, "corpus manifest with ground truth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (ingest->parsed()) {
            return cmd_ingest(globals, ingest_corpus, ingest_out, ingest_min_score, ingest_stats);
        }
        if (vocab->parsed()) {
            return cmd_vocab(globals, vocab_corpus, vocab_knowledge, vocab_top_n, vocab_out);
        }
        if (index->parsed()) {
            return cmd_index(globals, index_knowledge, index_out, index_endpoint);
        }
        if (run->parsed()) return cmd_run(globals, run_results);
        if (evaluate->parsed()) return cmd_evaluate(globals, eval_results, eval_corpus);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify(e);
    }
    return kExitConfig;
}
