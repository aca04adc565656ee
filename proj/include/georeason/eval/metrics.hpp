// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "georeason/backends/contracts.hpp"

namespace georeason::eval {

// The one tokenization every text metric shares: lowercase, punctuation
// isolated into single-character tokens, whitespace split.
std::vector<std::string> tokenize(std::string_view text);

// Sentence BLEU-n: geometric mean of clipped k-gram precisions for k=1..n
// (multi-reference clipping), brevity penalty against the closest reference
// length (ties favor the shorter), zero precisions smoothed to 1e-9. Empty
// candidate scores 0.
double bleu_n(const std::string& candidate, std::span<const std::string> references, int n);

// ROUGE-L F-measure from the token LCS with beta = 1.2, max over references.
double rouge_l(const std::string& candidate, std::span<const std::string> references);

// Exact-match METEOR (no stemming or synonymy): unigram alignment maximizing
// matches then minimizing chunks, F_mean = PR/(0.9P + 0.1R), chunk penalty
// 0.5*(chunks/matches)^3, max over references.
double meteor_exact(const std::string& candidate, std::span<const std::string> references);

// Distinct n-grams over total n-grams across all candidates (n in {1,2});
// nullopt when no candidate yields an n-gram.
std::optional<double> dist_n(std::span<const std::string> candidates, int n);

struct CiderItem {
    std::string candidate;
    std::vector<std::string> references;
};

// Corpus CIDEr in [0,10]: per n in 1..4, cosine between tf-idf n-gram
// vectors (idf = log(N / max(1, df)) over reference sets) scaled by the
// Gaussian length penalty exp(-(lc-lr)^2 / (2*6^2)), averaged over
// references, then over n, times 10. When idf degenerates to all-zero
// vectors on both sides (single-item corpora), the cosine falls back to
// exact raw-count equality.
double cider(std::span<const CiderItem> corpus);

// Greedy-matching BERTScore F1 over token embeddings, max over references;
// nullopt when the encoder cannot embed text tokens.
std::optional<double> bertscore_f1(const std::string& candidate,
                                   std::span<const std::string> references,
                                   backends::EncoderBackend& encoder);

}  // namespace georeason::eval
