// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/retrieval/embedding.hpp"

#include <cmath>

#include "georeason/errors.hpp"
#include "georeason/simd/kernels.hpp"

namespace georeason::retrieval {

double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
    if (u.dim() != v.dim()) {
        throw DimensionMismatch("cosine over dims " + std::to_string(u.dim()) + " and " +
                                std::to_string(v.dim()));
    }
    double nu = simd::squared_norm(u.values);
    double nv = simd::squared_norm(v.values);
    if (nu == 0.0 || nv == 0.0) throw ZeroVector("cosine is undefined for a zero vector");
    return simd::dot(u.values, v.values) / (std::sqrt(nu) * std::sqrt(nv));
}

}  // namespace georeason::retrieval
