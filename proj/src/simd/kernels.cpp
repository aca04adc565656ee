// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/simd/kernels.hpp"

#include <cassert>
#include <cstdlib>
#include <cstring>

namespace georeason::simd {

namespace detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double squared_norm_scalar(const double* v, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i] * v[i];
    return s;
}

}  // namespace detail

namespace {

struct KernelSet {
    const char* name;
    double (*dot)(const double*, const double*, std::size_t);
    double (*squared_norm)(const double*, std::size_t);
};

constexpr KernelSet kScalar{"scalar", detail::dot_scalar, detail::squared_norm_scalar};

KernelSet select() {
    const char* forced = std::getenv("GEOREASON_SIMD");
    if (forced && std::strcmp(forced, "scalar") == 0) return kScalar;
#if defined(__x86_64__) || defined(_M_X64)
    bool want_avx2 = (forced == nullptr) || std::strcmp(forced, "avx2") == 0;
    if (want_avx2 && detail::cpu_supports_avx2()) {
        return {"avx2", detail::dot_avx2, detail::squared_norm_avx2};
    }
#endif
#if defined(__aarch64__)
    bool want_neon = (forced == nullptr) || std::strcmp(forced, "neon") == 0;
    if (want_neon) {
        return {"neon", detail::dot_neon, detail::squared_norm_neon};
    }
#endif
    return kScalar;
}

const KernelSet& active() {
    static const KernelSet k = select();
    return k;
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    return active().dot(a.data(), b.data(), a.size());
}

double squared_norm(std::span<const double> v) {
    return active().squared_norm(v.data(), v.size());
}

std::string_view active_kernel_set() {
    return active().name;
}

}  // namespace georeason::simd
