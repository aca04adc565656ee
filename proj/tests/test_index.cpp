// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include <doctest.h>

#include <cmath>
#include <random>

#include "georeason/backends/mocks.hpp"
#include "georeason/corpus/manifest.hpp"
#include "georeason/simd/kernels.hpp"
#include "georeason/errors.hpp"
#include "georeason/retrieval/index.hpp"
#include "georeason/util/files.hpp"
#include "support/fixtures.hpp"

using namespace georeason;
using retrieval::EmbeddingVector;

namespace {

EmbeddingVector vec(std::initializer_list<double> values) {
    return EmbeddingVector{std::vector<double>(values)};
}

}  // namespace

TEST_CASE("cosine basics") {
    CHECK(retrieval::cosine(vec({1, 0, 0}), vec({1, 0, 0})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(retrieval::cosine(vec({1, 0}), vec({0, 1})) == doctest::Approx(0.0).epsilon(1e-12));
    // 32 / (sqrt(14) * sqrt(77))
    CHECK(retrieval::cosine(vec({1, 2, 3}), vec({4, 5, 6})) ==
          doctest::Approx(0.974631846).epsilon(1e-9));
    CHECK_THROWS_AS(retrieval::cosine(vec({1, 2}), vec({1, 2, 3})), DimensionMismatch);
    CHECK_THROWS_AS(retrieval::cosine(vec({0, 0}), vec({1, 2})), ZeroVector);
}

TEST_CASE("cosine self-similarity and scale invariance") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::uniform_real_distribution<double> scale(0.01, 50.0);
    for (int i = 0; i < 500; ++i) {
        std::size_t dim = 2 + rng() % 64;
        EmbeddingVector u, v;
        u.values.resize(dim);
        v.values.resize(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            u.values[d] = dist(rng);
            v.values[d] = dist(rng);
        }
        if (simd::squared_norm(u.values) == 0.0 || simd::squared_norm(v.values) == 0.0) continue;
        CHECK(std::fabs(retrieval::cosine(u, u) - 1.0) <= 1e-9);
        double base = retrieval::cosine(u, v);
        CHECK(base >= -1.0 - 1e-9);
        CHECK(base <= 1.0 + 1e-9);
        EmbeddingVector su = u;
        double alpha = scale(rng);
        for (double& x : su.values) x *= alpha;
        CHECK(std::fabs(retrieval::cosine(su, v) - base) <= 1e-9);
    }
}

TEST_CASE("build_index") {
    fixtures::TempDir tmp;

    SUBCASE("empty knowledge base is an error") {
        corpus::KnowledgeBase kb;
        backends::MockEncoder encoder(1, 8);
        try {
            retrieval::build_index(kb, encoder);
            FAIL("expected IndexBuildError");
        } catch (const IndexBuildError& e) {
            CHECK(std::string(e.what()).find("empty knowledge base") != std::string::npos);
        }
    }

    SUBCASE("three entries in manifest order with encoder id") {
        auto built = fixtures::build_knowledge(tmp.path(), 3);
        corpus::KnowledgeBase kb = corpus::load_knowledge(built.manifest);
        backends::MockEncoder encoder(1, 8);
        auto index = retrieval::build_index(kb, encoder);
        CHECK(index.encoder_id == encoder.encoder_id());
        CHECK(index.dim == 8);
        REQUIRE(index.entries.size() == 3);
        CHECK(index.entries[0].knowledge_id == "k0");
        CHECK(index.entries[1].knowledge_id == "k1");
        CHECK(index.entries[2].knowledge_id == "k2");
        for (const auto& e : index.entries) {
            CHECK(e.vector.dim() == 8);
            CHECK(std::fabs(simd::squared_norm(e.vector.values) - 1.0) <= 1e-9);
        }
    }

    SUBCASE("zero and non-finite embeddings are rejected") {
        class BadEncoder : public backends::EncoderBackend {
        public:
            explicit BadEncoder(double fill) : fill_(fill) {}
            std::string encoder_id() const override { return "bad"; }
            std::size_t dim() const override { return 4; }
            retrieval::EmbeddingVector embed_image(const std::string&,
                                                   std::span<const std::uint8_t>) override {
                return retrieval::EmbeddingVector{{fill_, fill_, fill_, fill_}};
            }
            double fill_;
        };
        auto built = fixtures::build_knowledge(tmp.path(), 1);
        corpus::KnowledgeBase kb = corpus::load_knowledge(built.manifest);
        BadEncoder zeros(0.0);
        CHECK_THROWS_AS(retrieval::build_index(kb, zeros), IndexBuildError);
        BadEncoder nans(std::nan(""));
        CHECK_THROWS_AS(retrieval::build_index(kb, nans), IndexBuildError);
    }

    SUBCASE("rebuild with the same mock produces identical bytes") {
        auto built = fixtures::build_knowledge(tmp.path(), 4);
        corpus::KnowledgeBase kb = corpus::load_knowledge(built.manifest);
        backends::MockEncoder encoder(7, 6);
        auto a = retrieval::build_index(kb, encoder);
        auto b = retrieval::build_index(kb, encoder);
        CHECK(a == b);
        auto pa = tmp.path() / "a.idx";
        auto pb = tmp.path() / "b.idx";
        retrieval::save_index(a, pa);
        retrieval::save_index(b, pb);
        CHECK(util::read_binary_file(pa) == util::read_binary_file(pb));
    }
}

TEST_CASE("index save/load") {
    fixtures::TempDir tmp;
    retrieval::KnowledgeIndex index;
    index.encoder_id = "mock-encoder-s1-d4";
    index.dim = 4;
    index.entries.push_back({"k0", vec({0.5, -0.5, 0.5, -0.5})});
    index.entries.push_back({"k1", vec({1.0, 0.0, 0.0, 0.0})});
    auto path = tmp.path() / "test.idx";
    retrieval::save_index(index, path);

    SUBCASE("round trip identity") {
        auto loaded = retrieval::load_index(path);
        CHECK(loaded == index);
        CHECK(loaded.dim == 4);
    }

    SUBCASE("truncated file is corrupt") {
        auto bytes = util::read_binary_file(path);
        bytes.resize(bytes.size() / 2);
        util::write_binary_file(path, bytes.data(), bytes.size());
        CHECK_THROWS_AS(retrieval::load_index(path), CorruptIndex);
    }

    SUBCASE("bad magic is corrupt") {
        auto bytes = util::read_binary_file(path);
        bytes[0] = 'X';
        util::write_binary_file(path, bytes.data(), bytes.size());
        CHECK_THROWS_AS(retrieval::load_index(path), CorruptIndex);
    }

    SUBCASE("unknown version") {
        auto bytes = util::read_binary_file(path);
        bytes[4] = 9;  // version field, little-endian
        util::write_binary_file(path, bytes.data(), bytes.size());
        CHECK_THROWS_AS(retrieval::load_index(path), VersionMismatch);
    }

    SUBCASE("trailing garbage is corrupt") {
        auto bytes = util::read_binary_file(path);
        bytes.push_back(0);
        util::write_binary_file(path, bytes.data(), bytes.size());
        CHECK_THROWS_AS(retrieval::load_index(path), CorruptIndex);
    }

    SUBCASE("non-finite vector value is corrupt") {
        auto bytes = util::read_binary_file(path);
        // Overwrite the final double of the last entry with a NaN pattern.
        std::uint64_t nan_bits = 0x7FF8000000000000ULL;
        for (int i = 0; i < 8; ++i) {
            bytes[bytes.size() - 8 + i] = std::uint8_t(nan_bits >> (8 * i));
        }
        util::write_binary_file(path, bytes.data(), bytes.size());
        CHECK_THROWS_AS(retrieval::load_index(path), CorruptIndex);
    }

    SUBCASE("missing file") {
        CHECK_THROWS_AS(retrieval::load_index(tmp.path() / "nope.idx"), CorruptIndex);
    }
}
