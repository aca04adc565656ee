// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/retrieval/topk.hpp"

#include <algorithm>
#include <queue>

#include "georeason/errors.hpp"
#include "georeason/util/files.hpp"

namespace georeason::retrieval {

namespace util = georeason::util;

namespace {

struct Candidate {
    double score = 0.0;
    std::size_t knowledge_index = 0;
    std::size_t clue_index = 0;
};

// Strict ranking: score descending, then knowledge manifest order, then
// clue order.
bool ranks_before(const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.knowledge_index != b.knowledge_index) return a.knowledge_index < b.knowledge_index;
    return a.clue_index < b.clue_index;
}

RetrievalResult finalize(const KnowledgeIndex& index, const corpus::KnowledgeBase& kb,
                         std::span<const ClueEmbedding> clues,
                         const std::vector<Candidate>& selected) {
    RetrievalResult result;
    for (const Candidate& c : selected) {
        const std::string& kid = index.entries[c.knowledge_index].knowledge_id;
        const corpus::KnowledgeEntry* entry = kb.find(kid);
        if (entry == nullptr) {
            throw Error("index entry '" + kid + "' is missing from the knowledge base");
        }
        result.pairs.push_back({kid, clues[c.clue_index].clue_id, c.score});
        result.snippets.push_back(entry->snippet);
        result.clue_ids.push_back(clues[c.clue_index].clue_id);
    }
    return result;
}

}  // namespace

RetrievalResult retrieve_topk_embedded(const KnowledgeIndex& index,
                                       const corpus::KnowledgeBase& kb,
                                       std::span<const ClueEmbedding> clues,
                                       const RetrieveOptions& options) {
    if (options.k < 1) throw Error("retrieval k must be >= 1");
    if (clues.empty()) return {};

    for (const ClueEmbedding& c : clues) {
        if (c.vector.dim() != index.dim) {
            throw DimensionMismatch("clue '" + c.clue_id + "' has dim " +
                                    std::to_string(c.vector.dim()) + ", index dim " +
                                    std::to_string(index.dim));
        }
    }

    const std::size_t k = static_cast<std::size_t>(options.k);
    std::vector<Candidate> selected;

    if (options.distinct_knowledge) {
        // Full sort, then greedily skip knowledge entries already used.
        std::vector<Candidate> all;
        all.reserve(index.entries.size() * clues.size());
        for (std::size_t ki = 0; ki < index.entries.size(); ++ki) {
            for (std::size_t vi = 0; vi < clues.size(); ++vi) {
                all.push_back({cosine(index.entries[ki].vector, clues[vi].vector), ki, vi});
            }
        }
        std::sort(all.begin(), all.end(), ranks_before);
        std::vector<bool> used(index.entries.size(), false);
        for (const Candidate& c : all) {
            if (used[c.knowledge_index]) continue;
            used[c.knowledge_index] = true;
            selected.push_back(c);
            if (selected.size() == k) break;
        }
    } else {
        // Bounded selection: a heap of the k best pairs, worst on top.
        auto worse = [](const Candidate& a, const Candidate& b) { return ranks_before(a, b); };
        std::priority_queue<Candidate, std::vector<Candidate>, decltype(worse)> heap(worse);
        for (std::size_t ki = 0; ki < index.entries.size(); ++ki) {
            for (std::size_t vi = 0; vi < clues.size(); ++vi) {
                Candidate c{cosine(index.entries[ki].vector, clues[vi].vector), ki, vi};
                if (heap.size() < k) {
                    heap.push(c);
                } else if (ranks_before(c, heap.top())) {
                    heap.pop();
                    heap.push(c);
                }
            }
        }
        selected.resize(heap.size());
        for (std::size_t i = heap.size(); i-- > 0;) {
            selected[i] = heap.top();
            heap.pop();
        }
    }

    return finalize(index, kb, clues, selected);
}

RetrievalResult retrieve_topk(const KnowledgeIndex& index, const corpus::KnowledgeBase& kb,
                              std::span<const clues::VisualClue> clues,
                              backends::EncoderBackend& encoder, const RetrieveOptions& options) {
    if (encoder.encoder_id() != index.encoder_id) {
        throw EncoderMismatch("index was built with encoder '" + index.encoder_id +
                              "', got '" + encoder.encoder_id() + "'");
    }
    std::vector<ClueEmbedding> embedded;
    embedded.reserve(clues.size());
    for (const clues::VisualClue& clue : clues) {
        auto bytes = util::read_binary_file(clue.crop_path);
        embedded.push_back({clue.id, encoder.embed_image(clue.id, bytes)});
    }
    return retrieve_topk_embedded(index, kb, embedded, options);
}

}  // namespace georeason::retrieval
