// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Dense double-precision kernels behind the retrieval stage. The dispatched
// entry points pick the widest instruction set the host CPU supports on
// first use; GEOREASON_SIMD=scalar|avx2|neon overrides the choice when the
// requested set is available. All variants are equivalence-tested against
// the scalar reference.

namespace georeason::simd {

// a and b must have equal length.
double dot(std::span<const double> a, std::span<const double> b);

double squared_norm(std::span<const double> v);

// Kernel set selected by the dispatcher: "avx2", "neon" or "scalar".
std::string_view active_kernel_set();

namespace detail {

double dot_scalar(const double* a, const double* b, std::size_t n);
double squared_norm_scalar(const double* v, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
bool cpu_supports_avx2();
double dot_avx2(const double* a, const double* b, std::size_t n);
double squared_norm_avx2(const double* v, std::size_t n);
#endif

#if defined(__aarch64__)
double dot_neon(const double* a, const double* b, std::size_t n);
double squared_norm_neon(const double* v, std::size_t n);
#endif

}  // namespace detail

}  // namespace georeason::simd
