// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

// NEON variants. Advanced SIMD is baseline on AArch64, so these compile
// unconditionally there and the dispatcher prefers them.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>

#include "georeason/simd/kernels.hpp"

namespace georeason::simd::detail {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double sum = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

double squared_norm_neon(const double* v, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float64x2_t x0 = vld1q_f64(v + i);
        float64x2_t x1 = vld1q_f64(v + i + 2);
        acc0 = vfmaq_f64(acc0, x0, x0);
        acc1 = vfmaq_f64(acc1, x1, x1);
    }
    double sum = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) sum += v[i] * v[i];
    return sum;
}

}  // namespace georeason::simd::detail

#endif  // __aarch64__
