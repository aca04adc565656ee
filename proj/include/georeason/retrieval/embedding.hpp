// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <cstddef>
#include <vector>

namespace georeason::retrieval {

inline constexpr std::size_t kDefaultEmbeddingDim = 768;

// Dense embedding as produced by a visual encoder. Values are stored exactly
// as the encoder returned them; normalization happens inside cosine().
struct EmbeddingVector {
    std::vector<double> values;

    std::size_t dim() const { return values.size(); }

    bool operator==(const EmbeddingVector&) const = default;
};

// dot(u,v) / (|u| |v|). Throws DimensionMismatch on unequal dims and
// ZeroVector when either argument has zero norm.
double cosine(const EmbeddingVector& u, const EmbeddingVector& v);

}  // namespace georeason::retrieval
