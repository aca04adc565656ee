// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/retrieval/index.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <unordered_set>

#include "georeason/errors.hpp"
#include "georeason/util/files.hpp"

namespace georeason::retrieval {

namespace util = georeason::util;

namespace {

constexpr char kMagic[4] = {'G', 'R', 'I', 'X'};
constexpr std::uint32_t kFormatVersion = 1;

// All integers little-endian, doubles as IEEE-754 bit patterns.
void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_f64(std::string& out, double d) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, &d, 8);
    put_u64(out, bits);
}

class Reader {
public:
    explicit Reader(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(bytes_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }

    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t(bytes_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }

    double f64() {
        std::uint64_t bits = u64();
        double d = 0;
        std::memcpy(&d, &bits, 8);
        return d;
    }

    std::string str(std::size_t len) {
        need(len);
        std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), len);
        pos_ += len;
        return s;
    }

    bool exhausted() const { return pos_ == bytes_.size(); }

private:
    void need(std::size_t n) {
        if (bytes_.size() - pos_ < n) throw CorruptIndex("index file truncated");
    }

    std::vector<std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

KnowledgeIndex build_index(const corpus::KnowledgeBase& kb, backends::EncoderBackend& encoder) {
    if (kb.entries.empty()) throw IndexBuildError("empty knowledge base");
    KnowledgeIndex index;
    index.encoder_id = encoder.encoder_id();
    index.dim = encoder.dim();
    index.entries.reserve(kb.entries.size());
    for (const corpus::KnowledgeEntry& entry : kb.entries) {
        auto bytes = util::read_binary_file(kb.resolve_image(entry.image));
        EmbeddingVector v = encoder.embed_image(entry.image, bytes);
        if (v.dim() != index.dim) {
            throw DimensionMismatch("encoder returned dim " + std::to_string(v.dim()) +
                                    " for '" + entry.id + "', declared " +
                                    std::to_string(index.dim));
        }
        double norm_sq = 0.0;
        for (double x : v.values) {
            if (!std::isfinite(x)) {
                throw IndexBuildError("non-finite embedding value for '" + entry.id + "'");
            }
            norm_sq += x * x;
        }
        // A zero vector would make every later cosine undefined.
        if (norm_sq == 0.0) {
            throw IndexBuildError("zero embedding vector for '" + entry.id + "'");
        }
        index.entries.push_back({entry.id, std::move(v)});
    }
    return index;
}

void save_index(const KnowledgeIndex& index, const std::filesystem::path& path) {
    std::string out;
    out.append(kMagic, sizeof(kMagic));
    put_u32(out, kFormatVersion);
    put_u32(out, static_cast<std::uint32_t>(index.encoder_id.size()));
    out += index.encoder_id;
    put_u32(out, static_cast<std::uint32_t>(index.dim));
    put_u64(out, index.entries.size());
    for (const KnowledgeIndex::Entry& e : index.entries) {
        put_u32(out, static_cast<std::uint32_t>(e.knowledge_id.size()));
        out += e.knowledge_id;
        for (double d : e.vector.values) put_f64(out, d);
    }
    util::write_text_file(path, out);
}

KnowledgeIndex load_index(const std::filesystem::path& path) {
    std::vector<std::uint8_t> bytes;
    try {
        bytes = util::read_binary_file(path);
    } catch (const Error&) {
        throw CorruptIndex("cannot read index file: " + path.string());
    }
    Reader r(std::move(bytes));
    std::string magic = r.str(4);
    if (std::memcmp(magic.data(), kMagic, 4) != 0) {
        throw CorruptIndex("bad index magic");
    }
    std::uint32_t version = r.u32();
    if (version != kFormatVersion) {
        throw VersionMismatch("unsupported index version " + std::to_string(version));
    }
    KnowledgeIndex index;
    index.encoder_id = r.str(r.u32());
    index.dim = r.u32();
    if (index.dim == 0) throw CorruptIndex("index declares dim 0");
    std::uint64_t count = r.u64();
    std::unordered_set<std::string> seen;
    index.entries.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        KnowledgeIndex::Entry e;
        e.knowledge_id = r.str(r.u32());
        if (!seen.insert(e.knowledge_id).second) {
            throw CorruptIndex("duplicate knowledge id '" + e.knowledge_id + "'");
        }
        e.vector.values.resize(index.dim);
        for (std::size_t d = 0; d < index.dim; ++d) {
            double x = r.f64();
            if (!std::isfinite(x)) {
                throw CorruptIndex("non-finite value in entry '" + e.knowledge_id + "'");
            }
            e.vector.values[d] = x;
        }
        index.entries.push_back(std::move(e));
    }
    if (!r.exhausted()) throw CorruptIndex("trailing bytes after last entry");
    return index;
}

}  // namespace georeason::retrieval
