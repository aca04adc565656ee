// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <span>
#include <string>
#include <vector>

#include "georeason/backends/contracts.hpp"
#include "georeason/clues/detect.hpp"
#include "georeason/corpus/types.hpp"
#include "georeason/retrieval/index.hpp"

namespace georeason::retrieval {

struct RetrievalPair {
    std::string knowledge_id;
    std::string clue_id;
    double score = 0.0;

    bool operator==(const RetrievalPair&) const = default;
};

// Top-k (knowledge, clue) pairs by cosine, descending, with the assisting
// snippets and clue ids aligned pairwise. The same knowledge entry (or the
// same clue) may appear in several pairs; selection runs over the full
// cross product.
struct RetrievalResult {
    std::vector<RetrievalPair> pairs;
    std::vector<std::string> snippets;  // snippets[m] belongs to pairs[m]
    std::vector<std::string> clue_ids;  // clue_ids[m] belongs to pairs[m]
};

struct RetrieveOptions {
    int k = 3;
    // When set, each knowledge entry may be selected at most once.
    bool distinct_knowledge = false;
};

struct ClueEmbedding {
    std::string clue_id;
    EmbeddingVector vector;
};

// Core selection over pre-embedded clues: exact, exhaustive, ties broken by
// (knowledge manifest order, clue order). Empty clue list yields an empty
// result.
RetrievalResult retrieve_topk_embedded(const KnowledgeIndex& index,
                                       const corpus::KnowledgeBase& kb,
                                       std::span<const ClueEmbedding> clues,
                                       const RetrieveOptions& options);

// Embeds each clue's crop image through the encoder, then selects. Throws
// EncoderMismatch when the encoder does not match the index.
RetrievalResult retrieve_topk(const KnowledgeIndex& index, const corpus::KnowledgeBase& kb,
                              std::span<const clues::VisualClue> clues,
                              backends::EncoderBackend& encoder, const RetrieveOptions& options);

}  // namespace georeason::retrieval
