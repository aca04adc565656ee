// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Returns the number of failed criteria. Runs under ctest; needs
// GEOREASON_BIN for the CLI-based criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "georeason/backends/mocks.hpp"
#include "georeason/corpus/manifest.hpp"
#include "georeason/eval/evaluate.hpp"
#include "georeason/eval/match.hpp"
#include "georeason/eval/metrics.hpp"
#include "georeason/reasoning/parse.hpp"
#include "georeason/reasoning/pipeline.hpp"
#include "georeason/retrieval/index.hpp"
#include "georeason/retrieval/topk.hpp"
#include "georeason/util/files.hpp"
#include "georeason/util/hash.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace georeason;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Harness {
    int failures = 0;
    std::string detail;

    void fail(const std::string& why) {
        if (!detail.empty()) detail += "; ";
        detail += why;
    }

    void run(int number, const std::string& name, const std::function<bool(Harness&)>& body) {
        detail.clear();
        bool ok = false;
        try {
            ok = body(*this);
        } catch (const std::exception& e) {
            fail(std::string("exception: ") + e.what());
        }
        if (ok) {
            std::printf("[PASS] criterion %d: %s\n", number, name.c_str());
        } else {
            ++failures;
            std::printf("[FAIL] criterion %d: %s (%s)\n", number, name.c_str(), detail.c_str());
        }
        std::fflush(stdout);
    }
};

bool close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- criterion 1: metric oracle equivalence ---------------------------------

struct MetricCase {
    std::string candidate;
    std::vector<std::string> references;
};

std::vector<MetricCase> hand_cases() {
    return {
        {"the bollard is white and red", {"the bollard is white and red"}},
        {"", {"non empty reference"}},
        {"single", {"single"}},
        {"completely unrelated words here", {"nothing matches at all", "still nothing"}},
        {"the cat", {"the the the"}},
        {"a b c d", {"a c d"}},
        {"the cat sat", {"the cat on the mat"}},
        {"one two three four", {"one two three four"}},
        {"a a a a", {"a", "a a"}},
        {"road sign with blue border", {"blue border road sign", "a road sign, blue border"}},
        {"left hand traffic and yellow plates", {"yellow plates suggest left hand traffic"}},
        {"snow on the mountains", {"mountains covered in snow", "snowy mountain view"}},
        {"punctuation, heavy. case!", {"punctuation, heavy. case!"}},
        {"repeated repeated repeated", {"repeated once only"}},
        {"x", {"x y z w v u t s r q"}},
        {"a very long candidate sentence that keeps going and going with many words",
         {"short ref"}},
        {"chevron signs are black on yellow", {"black on yellow chevron signs"}},
        {"the the the the", {"the cat"}},
        {"mixed CASE Tokens", {"mixed case tokens"}},
        {"numbers 123 and 456", {"numbers 123 and 456", "digits 123 456"}},
        {"trailing space ", {" leading space"}},
        {"a b a b a b", {"b a b a b a"}},
        {"guardrail along the coast road", {"coastal road with a guardrail"}},
        {"this one shares a few words", {"that one shares some words"}},
        {"utility pole with a transformer", {"a transformer on a utility pole",
                                             "utility pole, transformer attached"}},
    };
}

bool criterion_metrics(Harness& h) {
    auto start = Clock::now();
    auto cases = hand_cases();
    if (cases.size() != 25) {
        h.fail("expected 25 cases, have " + std::to_string(cases.size()));
        return false;
    }

    bool ok = true;
    std::vector<std::string> all_candidates;
    std::vector<eval::CiderItem> cider_corpus;
    std::vector<oracle::CiderItem> cider_mirror;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        all_candidates.push_back(c.candidate);
        cider_corpus.push_back({c.candidate, c.references});
        cider_mirror.push_back({c.candidate, c.references});

        for (int n : {3, 4}) {
            double got = eval::bleu_n(c.candidate, c.references, n);
            double want = oracle::bleu(c.candidate, c.references, n);
            if (!close(got, want, 1e-6)) {
                h.fail("bleu" + std::to_string(n) + " case " + std::to_string(i));
                ok = false;
            }
        }
        if (!close(eval::rouge_l(c.candidate, c.references),
                   oracle::rouge_l(c.candidate, c.references), 1e-6)) {
            h.fail("rouge case " + std::to_string(i));
            ok = false;
        }
        if (!close(eval::meteor_exact(c.candidate, c.references),
                   oracle::meteor_exact(c.candidate, c.references), 1e-6)) {
            h.fail("meteor case " + std::to_string(i));
            ok = false;
        }
    }

    for (int n : {1, 2}) {
        auto got = eval::dist_n(all_candidates, n);
        auto [distinct, total] = oracle::dist_counts(all_candidates, n);
        double want = double(distinct) / double(total);
        if (!got || !close(*got, want, 1e-6)) {
            h.fail("dist" + std::to_string(n));
            ok = false;
        }
    }

    if (!close(eval::cider(cider_corpus), oracle::cider(cider_mirror), 1e-4)) {
        h.fail("cider corpus");
        ok = false;
    }

    double elapsed = seconds_since(start);
    if (elapsed >= 5.0) {
        h.fail("runtime " + std::to_string(elapsed) + "s exceeds 5s");
        ok = false;
    }
    return ok;
}

// --- criterion 2: retrieval exactness ----------------------------------------

bool criterion_retrieval(Harness& h) {
    auto start = Clock::now();
    std::mt19937 rng(20260808);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    bool ok = true;

    for (int round = 0; round < 500; ++round) {
        std::size_t nk = 1 + rng() % 20;
        std::size_t nv = 1 + rng() % 20;
        std::size_t dim = 2 + rng() % 15;

        auto make = [&](std::size_t n) {
            std::vector<std::vector<double>> out(n, std::vector<double>(dim));
            for (auto& v : out) {
                bool zero = true;
                for (double& x : v) {
                    x = dist(rng);
                    if (x != 0.0) zero = false;
                }
                if (zero) v[0] = 1.0;
            }
            return out;
        };
        auto ks = make(nk);
        auto vs = make(nv);
        // Constructed ties: duplicated knowledge vectors and clue vectors.
        if (round % 7 == 0 && nk >= 2) ks[nk - 1] = ks[0];
        if (round % 11 == 0 && nv >= 2) vs[nv - 1] = vs[0];

        retrieval::KnowledgeIndex index;
        index.encoder_id = "acc";
        index.dim = dim;
        corpus::KnowledgeBase kb;
        for (std::size_t i = 0; i < nk; ++i) {
            std::string id = "k" + std::to_string(i);
            index.entries.push_back({id, retrieval::EmbeddingVector{ks[i]}});
            corpus::KnowledgeEntry e;
            e.id = id;
            e.image = id;
            e.country = "x";
            e.snippet = "s" + std::to_string(i);
            kb.index_by_id[id] = kb.entries.size();
            kb.entries.push_back(e);
        }
        std::vector<retrieval::ClueEmbedding> clue_vecs;
        for (std::size_t j = 0; j < nv; ++j) {
            clue_vecs.push_back({"v" + std::to_string(j), retrieval::EmbeddingVector{vs[j]}});
        }

        retrieval::RetrieveOptions opts;
        opts.k = 1 + int(rng() % 6);
        auto got = retrieval::retrieve_topk_embedded(index, kb, clue_vecs, opts);
        auto want = oracle::topk_pairs(ks, vs, std::size_t(opts.k));
        if (got.pairs.size() != want.size()) {
            h.fail("round " + std::to_string(round) + ": size mismatch");
            ok = false;
            continue;
        }
        for (std::size_t m = 0; m < want.size(); ++m) {
            if (got.pairs[m].knowledge_id != "k" + std::to_string(want[m].first) ||
                got.pairs[m].clue_id != "v" + std::to_string(want[m].second)) {
                h.fail("round " + std::to_string(round) + ": pair " + std::to_string(m));
                ok = false;
                break;
            }
        }
    }

    double elapsed = seconds_since(start);
    if (elapsed >= 10.0) {
        h.fail("runtime " + std::to_string(elapsed) + "s exceeds 10s");
        ok = false;
    }
    return ok;
}

// --- criterion 3: accuracy formula and strict monotonicity -------------------

bool criterion_accuracy(Harness& h) {
    std::mt19937 rng(333);
    bool ok = true;

    for (int round = 0; round < 100; ++round) {
        std::size_t n = 1 + rng() % 50;
        std::vector<eval::MatchResult> records(n);
        std::size_t want_country = 0, want_state = 0, want_city = 0, want_street = 0;
        for (auto& r : records) {
            r.country = rng() % 2;
            r.state = rng() % 2;
            r.city = rng() % 2;
            r.street = rng() % 2;
            want_country += r.country;
            want_state += r.state;
            want_city += r.city;
            want_street += r.street;
        }
        auto report = eval::accuracy(records);
        if (report.country() != double(want_country) / double(n) ||
            report.state() != double(want_state) / double(n) ||
            report.city() != double(want_city) / double(n) ||
            report.street() != double(want_street) / double(n)) {
            h.fail("exact rational accuracy violated at round " + std::to_string(round));
            ok = false;
        }
    }

    // Strict-mode monotonicity over random label predictions.
    auto aliases = eval::AliasTable::empty();
    const char* vals[] = {"alpha", "beta", "gamma", ""};
    for (int round = 0; round < 100; ++round) {
        std::vector<eval::MatchResult> records;
        std::size_t n = 1 + rng() % 30;
        for (std::size_t i = 0; i < n; ++i) {
            corpus::LocationLabel truth{"alpha", "beta", "gamma", "alpha"};
            corpus::LocationLabel cand{vals[rng() % 4], vals[rng() % 4], vals[rng() % 4],
                                       vals[rng() % 4]};
            records.push_back(
                eval::match_location(cand, truth, aliases, eval::MatchMode::Strict));
        }
        auto report = eval::accuracy(records);
        if (!(report.street() <= report.city() && report.city() <= report.state() &&
              report.state() <= report.country())) {
            h.fail("strict monotonicity violated at round " + std::to_string(round));
            ok = false;
        }
    }
    return ok;
}

// --- criterion 4: oracle end to end ------------------------------------------

struct PipelineRig {
    fixtures::TempDir tmp;
    corpus::Corpus corpus_data;
    corpus::KnowledgeBase kb;
    retrieval::KnowledgeIndex index;
    backends::MockEncoder encoder{11, 16};
    backends::MockDetector detector{backends::MockDetector::Fixture{}};
    clues::DetectionPromptVocabulary vocabulary;
    reasoning::PipelineOptions options;

    explicit PipelineRig(std::size_t samples) {
        auto built = fixtures::build_corpus(tmp.path(), {.samples = samples});
        corpus_data = corpus::load_corpus(built.manifest);
        auto built_kb = fixtures::build_knowledge(tmp.path(), 3);
        kb = corpus::load_knowledge(built_kb.manifest);
        index = retrieval::build_index(kb, encoder);

        backends::MockDetector::Fixture fixture;
        for (const auto& s : corpus_data.samples) {
            fixture[s.panorama[0]] = {{1, 1, 8, 8, "bollard", 0.9}};
        }
        detector = backends::MockDetector(fixture);

        vocabulary.terms = {"bollard"};
        vocabulary.source_hash = "acc";
        options.config_hash = "acceptance";
        options.work_dir = tmp.path() / "work";
        std::filesystem::create_directories(options.work_dir);
    }

    std::vector<reasoning::PredictionRecord> run(backends::GeneratorBackend& generator,
                                                 std::size_t concurrency) {
        reasoning::PipelineBackends b;
        b.detector = &detector;
        b.encoder = &encoder;
        b.generator = &generator;
        reasoning::Pipeline pipeline(corpus_data, &kb, &index, vocabulary,
                                     reasoning::TemplateRegistry::builtin(), options, b);
        return pipeline.run_all(concurrency);
    }
};

bool criterion_end_to_end(Harness& h) {
    PipelineRig rig(10);
    bool ok = true;

    std::map<std::string, backends::MockGenerator::EchoEntry> table;
    for (const auto& s : rig.corpus_data.samples) {
        table[s.id] = {s.location, s.explanations.front()};
    }
    auto echo = backends::MockGenerator::echo_template(table);
    auto records = rig.run(echo, 4);
    auto result = eval::evaluate_run(records, rig.corpus_data, {});
    if (result.accuracy.country() != 1.0 || result.accuracy.state() != 1.0 ||
        result.accuracy.city() != 1.0 || result.accuracy.street() != 1.0) {
        h.fail("echo generator accuracy below 1.0");
        ok = false;
    }
    if (!close(result.text.bleu3, 1.0, 1e-9) || !close(result.text.bleu4, 1.0, 1e-9) ||
        !close(result.text.rouge_l, 1.0, 1e-9)) {
        h.fail("echo generator BLEU/ROUGE below 1.0");
        ok = false;
    }

    auto garbage = backends::MockGenerator::fixed_text("no scaffold in this output at all");
    auto bad_records = rig.run(garbage, 4);
    auto bad = eval::evaluate_run(bad_records, rig.corpus_data, {});
    if (bad.accuracy.country() != 0.0 || bad.accuracy.state() != 0.0 ||
        bad.accuracy.city() != 0.0 || bad.accuracy.street() != 0.0) {
        h.fail("garbage generator accuracy above 0.0");
        ok = false;
    }
    for (const auto& r : bad_records) {
        if (r.status != reasoning::PredictionStatus::ParseFailure ||
            r.raw_output != "no scaffold in this output at all") {
            h.fail("garbage generator lost the raw output");
            ok = false;
            break;
        }
    }
    return ok;
}

// --- criterion 5: CLI chain determinism ---------------------------------------

bool criterion_determinism(Harness& h) {
    fixtures::TempDir tmp;
    auto corpus_fixture = fixtures::build_corpus(tmp.path(), {.samples = 6});
    auto knowledge_fixture = fixtures::build_knowledge(tmp.path(), 3);

    json detections = json::object();
    for (const auto& s : corpus_fixture.samples) {
        detections[s.panorama[0]] = json::array(
            {json{{"x", 2}, {"y", 2}, {"w", 8}, {"h", 8}, {"term", "bollard"},
                  {"confidence", 0.9}}});
    }
    util::write_text_file(tmp.path() / "detector.json", detections.dump());

    json table = json::object();
    for (const auto& s : corpus_fixture.samples) {
        table[s.id] = {{"country", s.location.country},
                       {"state", s.location.state},
                       {"city", s.location.city},
                       {"street", s.location.street},
                       {"explanation", s.explanations.front()}};
    }
    util::write_text_file(tmp.path() / "echo.json", table.dump());

    // Every run directory gets a byte-identical config file: relative paths
    // resolve against the config's directory, so outputs land per run while
    // the provenance hash stays the same across runs.
    json cfg;
    cfg["data_dir"] = fixtures::data_dir().string();
    cfg["corpus"]["manifest"] = "corpus.clean.jsonl";
    cfg["knowledge"]["manifest"] = "../knowledge.jsonl";
    cfg["index"]["path"] = "knowledge.idx";
    cfg["backends"]["detector"] = {{"type", "mock"}, {"fixture", "../detector.json"}};
    cfg["backends"]["encoder"] = {{"type", "mock"}, {"seed", 11}, {"dim", 16}};
    cfg["backends"]["generator"] = {{"type", "mock"},
                                    {"mode", "echo_template"},
                                    {"table", "../echo.json"}};
    cfg["output_dir"] = ".";
    const std::string config_body = cfg.dump(2);

    auto chain = [&](const std::filesystem::path& out_dir, int concurrency) -> bool {
        auto config_path = out_dir / "config.json";
        util::write_text_file(config_path, config_body);
        std::vector<std::vector<std::string>> commands = {
            {"--config", config_path.string(), "ingest", "--corpus",
             corpus_fixture.manifest.string(), "--out",
             (out_dir / "corpus.clean.jsonl").string()},
            {"--config", config_path.string(), "index"},
            {"--config", config_path.string(), "--concurrency", std::to_string(concurrency),
             "run"},
            {"--config", config_path.string(), "evaluate"},
        };
        for (auto& cmd : commands) {
            auto res = fixtures::run_cli(cmd);
            if (res.exit_code != 0) {
                h.fail("cli step failed (" + std::to_string(res.exit_code) + "): " + res.output);
                return false;
            }
        }
        return true;
    };

    std::vector<std::string> digests;
    for (int concurrency : {1, 4, 16}) {
        for (int repeat = 0; repeat < 2; ++repeat) {
            auto out_dir = tmp.path() / ("run_c" + std::to_string(concurrency) + "_" +
                                         std::to_string(repeat));
            std::filesystem::create_directories(out_dir);
            if (!chain(out_dir, concurrency)) return false;
            std::string combined;
            for (const char* name :
                 {"corpus.clean.jsonl", "results.jsonl", "evaluation_report.jsonl",
                  "per_sample.jsonl", "report.txt"}) {
                combined += util::sha256_file_hex(out_dir / name);
            }
            combined += util::sha256_file_hex(out_dir / "knowledge.idx");
            digests.push_back(util::sha256_hex(combined));
        }
    }
    for (std::size_t i = 1; i < digests.size(); ++i) {
        if (digests[i] != digests[0]) {
            h.fail("digest " + std::to_string(i) + " differs");
            return false;
        }
    }
    return true;
}

// --- criterion 6: parser totality and round trip ------------------------------

bool criterion_parser(Harness& h) {
    std::mt19937 rng(0xC0FFEE);
    for (int i = 0; i < 100000; ++i) {
        std::size_t len = rng() % 160;
        std::string s;
        s.reserve(len);
        for (std::size_t k = 0; k < len; ++k) {
            switch (rng() % 8) {
                case 0: s += '{'; break;
                case 1: s += '}'; break;
                case 2: s += ','; break;
                case 3: s += "PLACE {,}."[rng() % 10]; break;
                default: s += char(rng() % 256); break;
            }
        }
        try {
            (void)reasoning::parse_answer(s);
        } catch (...) {
            h.fail("parser threw on fuzz input " + std::to_string(i));
            return false;
        }
    }

    auto random_field = [&](bool allow_empty) {
        static const char alphabet[] =
            "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
        if (allow_empty && rng() % 4 == 0) return std::string();
        std::size_t words = 1 + rng() % 3;
        std::string out;
        for (std::size_t w = 0; w < words; ++w) {
            if (w) out += ' ';
            std::size_t len = 1 + rng() % 10;
            for (std::size_t c = 0; c < len; ++c) {
                out += alphabet[rng() % (sizeof(alphabet) - 1)];
            }
        }
        return out;
    };
    for (int i = 0; i < 10000; ++i) {
        corpus::LocationLabel label{random_field(true), random_field(true), random_field(true),
                                    random_field(true)};
        std::string explanation = random_field(true);
        auto parsed = reasoning::parse_answer(reasoning::format_answer(label, explanation));
        if (!parsed.ok || parsed.location != label || parsed.explanation != explanation) {
            h.fail("round trip broke at iteration " + std::to_string(i));
            return false;
        }
    }
    return true;
}

// --- criterion 7: ablation axis ----------------------------------------------

bool criterion_ablation(Harness& h) {
    PipelineRig rig(4);
    std::map<std::string, backends::MockGenerator::EchoEntry> table;
    for (const auto& s : rig.corpus_data.samples) {
        table[s.id] = {s.location, s.explanations.front()};
    }
    auto echo = backends::MockGenerator::echo_template(table);
    bool ok = true;

    rig.options.stages = {.detection = false, .retrieval = false};
    for (const auto& r : rig.run(echo, 2)) {
        if (!r.provenance.clue_ids.empty() || !r.provenance.knowledge_ids.empty()) {
            h.fail("panorama-only mode leaked clue or knowledge inputs");
            ok = false;
            break;
        }
    }

    rig.options.stages = {.detection = true, .retrieval = false};
    for (const auto& r : rig.run(echo, 2)) {
        if (r.provenance.clue_ids.empty() || !r.provenance.knowledge_ids.empty()) {
            h.fail("clue mode must ship clues and no knowledge");
            ok = false;
            break;
        }
    }

    rig.options.stages = {.detection = true, .retrieval = true};
    for (const auto& r : rig.run(echo, 2)) {
        if (r.provenance.clue_ids.empty() || r.provenance.knowledge_ids.empty()) {
            h.fail("full mode must ship clues and knowledge");
            ok = false;
            break;
        }
    }
    return ok;
}

// --- criterion 8: numeric hygiene ----------------------------------------------

bool criterion_numeric(Harness& h) {
    std::mt19937 rng(888);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    std::uniform_real_distribution<double> scale(1e-3, 1e3);
    bool ok = true;

    for (int i = 0; i < 10000; ++i) {
        std::size_t dim = 2 + rng() % 767;
        retrieval::EmbeddingVector u, v;
        u.values.resize(dim);
        v.values.resize(dim);
        bool u_zero = true, v_zero = true;
        for (std::size_t d = 0; d < dim; ++d) {
            u.values[d] = dist(rng);
            v.values[d] = dist(rng);
            u_zero &= u.values[d] == 0.0;
            v_zero &= v.values[d] == 0.0;
        }
        if (u_zero) u.values[0] = 1.0;
        if (v_zero) v.values[0] = 1.0;

        if (std::fabs(retrieval::cosine(u, u) - 1.0) > 1e-9) {
            h.fail("self-similarity off at iteration " + std::to_string(i));
            ok = false;
            break;
        }
        double base = retrieval::cosine(u, v);
        retrieval::EmbeddingVector su = u;
        double alpha = scale(rng);
        for (double& x : su.values) x *= alpha;
        if (std::fabs(retrieval::cosine(su, v) - base) > 1e-9) {
            h.fail("scale invariance off at iteration " + std::to_string(i));
            ok = false;
            break;
        }
    }

    // Bounded metrics stay in range on random text.
    static const char* kWords[] = {"road", "sign", "bollard", "the", "a", "snow", ","};
    auto random_text = [&](std::size_t max_words) {
        std::size_t n = rng() % (max_words + 1);
        std::string out;
        for (std::size_t i = 0; i < n; ++i) {
            if (i) out += ' ';
            out += kWords[rng() % 7];
        }
        return out;
    };
    for (int i = 0; i < 400 && ok; ++i) {
        std::string cand = random_text(12);
        std::vector<std::string> refs{random_text(12), random_text(6)};
        for (int n : {1, 2, 3, 4}) {
            double b = eval::bleu_n(cand, refs, n);
            if (b < 0.0 || b > 1.0 + 1e-12) {
                h.fail("bleu out of range");
                ok = false;
            }
        }
        double r = eval::rouge_l(cand, refs);
        double m = eval::meteor_exact(cand, refs);
        if (r < 0.0 || r > 1.0 || m < 0.0 || m > 1.0) {
            h.fail("rouge/meteor out of range");
            ok = false;
        }
        std::vector<eval::CiderItem> ci{{cand, refs}, {random_text(8), {random_text(8)}}};
        double c = eval::cider(ci);
        if (c < 0.0 || c > 10.0 + 1e-9) {
            h.fail("cider out of range");
            ok = false;
        }
        std::vector<std::string> cands{cand, random_text(9)};
        for (int n : {1, 2}) {
            auto d = eval::dist_n(cands, n);
            if (d && (*d < 0.0 || *d > 1.0)) {
                h.fail("dist out of range");
                ok = false;
            }
        }
    }
    return ok;
}

}  // namespace

int main() {
    Harness h;
    h.run(1, "metric oracle equivalence (25 hand cases, 1e-6 / cider 1e-4, <5s)",
          criterion_metrics);
    h.run(2, "retrieval equals exhaustive-sort oracle (500 random instances, <10s)",
          criterion_retrieval);
    h.run(3, "accuracy is the exact rational count; strict mode is monotone",
          criterion_accuracy);
    h.run(4, "oracle end-to-end: echo generator scores 1.0, garbage scores 0.0",
          criterion_end_to_end);
    h.run(5, "byte-identical CLI chain at concurrency 1/4/16, two runs each",
          criterion_determinism);
    h.run(6, "parse_answer is total over 1e5 fuzz strings; 1e4 round trips hold",
          criterion_parser);
    h.run(7, "stage toggles reproduce the three ablation modes with provenance",
          criterion_ablation);
    h.run(8, "cosine hygiene over 1e4 vectors; metrics stay in declared ranges",
          criterion_numeric);

    if (h.failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", h.failures);
    }
    return h.failures;
}
