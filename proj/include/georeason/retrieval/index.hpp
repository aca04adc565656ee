// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "georeason/backends/contracts.hpp"
#include "georeason/corpus/types.hpp"
#include "georeason/retrieval/embedding.hpp"

namespace georeason::retrieval {

// Embeddings of every knowledge image, in knowledge-manifest order. The
// encoder_id pins which encoder produced the vectors; retrieval refuses to
// mix encoders.
struct KnowledgeIndex {
    std::string encoder_id;
    std::size_t dim = 0;

    struct Entry {
        std::string knowledge_id;
        EmbeddingVector vector;

        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;

    bool operator==(const KnowledgeIndex&) const = default;
};

// Embeds every knowledge image in kb order. Throws IndexBuildError on an
// empty base and DimensionMismatch if the encoder strays from its declared
// dimension.
KnowledgeIndex build_index(const corpus::KnowledgeBase& kb, backends::EncoderBackend& encoder);

// Versioned binary format (magic, version, encoder_id, dim, entry count,
// then id/vector records). save/load round-trips identically; load throws
// CorruptIndex on damage and VersionMismatch on an unknown version.
void save_index(const KnowledgeIndex& index, const std::filesystem::path& path);
KnowledgeIndex load_index(const std::filesystem::path& path);

}  // namespace georeason::retrieval
