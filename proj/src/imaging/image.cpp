// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/imaging/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "georeason/errors.hpp"

namespace georeason::img {

namespace {

bool is_ppm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Reads the next ASCII integer token, skipping whitespace and '#' comments.
bool next_token_int(std::span<const std::uint8_t> bytes, std::size_t& pos, long& value) {
    while (pos < bytes.size()) {
        if (is_ppm_space(bytes[pos])) {
            ++pos;
        } else if (bytes[pos] == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
    if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9') return false;
    long v = 0;
    while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
        v = v * 10 + (bytes[pos] - '0');
        if (v > 1'000'000'000L) return false;
        ++pos;
    }
    value = v;
    return true;
}

}  // namespace

Image decode_ppm(std::span<const std::uint8_t> bytes, const std::string& image_id) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
        throw ImageDecodeError(image_id, "not a binary PPM (P6) file");
    }
    std::size_t pos = 2;
    long w = 0, h = 0, maxval = 0;
    if (!next_token_int(bytes, pos, w) || !next_token_int(bytes, pos, h) ||
        !next_token_int(bytes, pos, maxval)) {
        throw ImageDecodeError(image_id, "malformed PPM header");
    }
    if (w <= 0 || h <= 0 || w > 65535 || h > 65535) {
        throw ImageDecodeError(image_id, "implausible dimensions");
    }
    if (maxval != 255) {
        throw ImageDecodeError(image_id, "only maxval 255 is supported");
    }
    // Exactly one whitespace byte separates the header from pixel data.
    if (pos >= bytes.size() || !is_ppm_space(bytes[pos])) {
        throw ImageDecodeError(image_id, "malformed PPM header");
    }
    ++pos;
    std::size_t need = std::size_t(w) * std::size_t(h) * 3;
    if (bytes.size() - pos < need) {
        throw ImageDecodeError(image_id, "truncated pixel data");
    }
    Image out;
    out.width = static_cast<int>(w);
    out.height = static_cast<int>(h);
    out.pixels.assign(bytes.begin() + pos, bytes.begin() + pos + need);
    return out;
}

Image load_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ImageDecodeError(path.string(), "cannot open file");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return decode_ppm(bytes, path.string());
}

std::vector<std::uint8_t> encode_ppm(const Image& image) {
    std::string header =
        "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + image.pixels.size());
    out.insert(out.end(), header.begin(), header.end());
    out.insert(out.end(), image.pixels.begin(), image.pixels.end());
    return out;
}

void save_ppm(const Image& image, const std::filesystem::path& path) {
    auto bytes = encode_ppm(image);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write image file: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("short write on image file: " + path.string());
}

Image crop(const Image& image, int x, int y, int w, int h) {
    int x0 = std::clamp(x, 0, image.width);
    int y0 = std::clamp(y, 0, image.height);
    int x1 = std::clamp(x + w, 0, image.width);
    int y1 = std::clamp(y + h, 0, image.height);
    Image out;
    if (x1 <= x0 || y1 <= y0) return out;
    out.width = x1 - x0;
    out.height = y1 - y0;
    out.pixels.resize(std::size_t(out.width) * out.height * 3);
    for (int row = 0; row < out.height; ++row) {
        std::memcpy(out.at(0, row), image.at(x0, y0 + row), std::size_t(out.width) * 3);
    }
    return out;
}

Image scale_to_long_edge(const Image& image, int long_edge) {
    if (image.empty() || long_edge <= 0) return image;
    int long_side = std::max(image.width, image.height);
    if (long_side <= long_edge) return image;

    auto scaled = [&](int side) {
        // round(side * long_edge / long_side) in integers
        return std::max(1, int((2L * side * long_edge + long_side) / (2L * long_side)));
    };
    int tw = image.width >= image.height ? long_edge : scaled(image.width);
    int th = image.width >= image.height ? scaled(image.height) : long_edge;

    Image out;
    out.width = tw;
    out.height = th;
    out.pixels.resize(std::size_t(tw) * th * 3);
    for (int oy = 0; oy < th; ++oy) {
        int y0 = int(std::int64_t(oy) * image.height / th);
        int y1 = std::max(y0 + 1, int(std::int64_t(oy + 1) * image.height / th));
        for (int ox = 0; ox < tw; ++ox) {
            int x0 = int(std::int64_t(ox) * image.width / tw);
            int x1 = std::max(x0 + 1, int(std::int64_t(ox + 1) * image.width / tw));
            std::uint64_t sum[3] = {0, 0, 0};
            for (int sy = y0; sy < y1; ++sy) {
                const std::uint8_t* p = image.at(x0, sy);
                for (int sx = x0; sx < x1; ++sx) {
                    sum[0] += p[0];
                    sum[1] += p[1];
                    sum[2] += p[2];
                    p += 3;
                }
            }
            std::uint64_t count = std::uint64_t(x1 - x0) * (y1 - y0);
            std::uint8_t* q = out.at(ox, oy);
            for (int c = 0; c < 3; ++c) {
                q[c] = static_cast<std::uint8_t>((sum[c] + count / 2) / count);
            }
        }
    }
    return out;
}

Image montage_grid(const std::vector<Image>& tiles) {
    Image out;
    if (tiles.empty()) return out;
    if (tiles.size() == 1) return tiles.front();

    int n = static_cast<int>(tiles.size());
    int cols = static_cast<int>(std::ceil(std::sqrt(double(n))));
    int rows = (n + cols - 1) / cols;
    int cell_w = 0;
    int cell_h = 0;
    for (const Image& t : tiles) {
        cell_w = std::max(cell_w, t.width);
        cell_h = std::max(cell_h, t.height);
    }
    out.width = cols * cell_w;
    out.height = rows * cell_h;
    out.pixels.assign(std::size_t(out.width) * out.height * 3, 0);
    for (int i = 0; i < n; ++i) {
        const Image& t = tiles[std::size_t(i)];
        if (t.empty()) continue;
        int ox = (i % cols) * cell_w;
        int oy = (i / cols) * cell_h;
        for (int row = 0; row < t.height; ++row) {
            std::memcpy(out.at(ox, oy + row), t.at(0, row), std::size_t(t.width) * 3);
        }
    }
    return out;
}

}  // namespace georeason::img
