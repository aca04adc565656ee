// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "georeason/simd/kernels.hpp"

using namespace georeason;

namespace {

std::vector<double> random_vector(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

bool close_rel(double a, double b, double rel) {
    double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
    return std::fabs(a - b) <= rel * scale;
}

}  // namespace

TEST_CASE("dispatched kernels match the scalar reference") {
    std::mt19937 rng(42);
    for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(3), std::size_t(4),
                          std::size_t(7), std::size_t(15), std::size_t(16), std::size_t(17),
                          std::size_t(33), std::size_t(768), std::size_t(1001)}) {
        auto a = random_vector(rng, n);
        auto b = random_vector(rng, n);
        double dot_ref = simd::detail::dot_scalar(a.data(), b.data(), n);
        double norm_ref = simd::detail::squared_norm_scalar(a.data(), n);
        CHECK(close_rel(simd::dot(a, b), dot_ref, 1e-12));
        CHECK(close_rel(simd::squared_norm(a), norm_ref, 1e-12));
    }
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 variants match scalar when the cpu has them") {
    if (!simd::detail::cpu_supports_avx2()) return;
    std::mt19937 rng(43);
    for (int rep = 0; rep < 200; ++rep) {
        std::size_t n = rng() % 800;
        auto a = random_vector(rng, n);
        auto b = random_vector(rng, n);
        CHECK(close_rel(simd::detail::dot_avx2(a.data(), b.data(), n),
                        simd::detail::dot_scalar(a.data(), b.data(), n), 1e-12));
        CHECK(close_rel(simd::detail::squared_norm_avx2(a.data(), n),
                        simd::detail::squared_norm_scalar(a.data(), n), 1e-12));
    }
}
#endif

TEST_CASE("kernel selection reports a known set") {
    auto name = simd::active_kernel_set();
    CHECK((name == "scalar" || name == "avx2" || name == "neon"));
}

TEST_CASE("empty input") {
    std::vector<double> empty;
    CHECK(simd::dot(empty, empty) == 0.0);
    CHECK(simd::squared_norm(empty) == 0.0);
}
