// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace georeason::img {

// 8-bit RGB raster, row-major, interleaved channels. The corpus treats image
// files as opaque bytes; decoding happens only where pixels are needed
// (clue crops, thumbnails). On-disk format is binary PPM (P6).
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // width * height * 3

    bool empty() const { return width <= 0 || height <= 0; }

    std::uint8_t* at(int x, int y) { return pixels.data() + 3 * (std::size_t(y) * width + x); }
    const std::uint8_t* at(int x, int y) const {
        return pixels.data() + 3 * (std::size_t(y) * width + x);
    }
};

// Throw ImageDecodeError with the given id on malformed input.
Image decode_ppm(std::span<const std::uint8_t> bytes, const std::string& image_id);
Image load_ppm(const std::filesystem::path& path);

std::vector<std::uint8_t> encode_ppm(const Image& image);
void save_ppm(const Image& image, const std::filesystem::path& path);

// Crop clamped to image bounds; empty result if the box lies fully outside.
Image crop(const Image& image, int x, int y, int w, int h);

// Area-average downscale so the long edge becomes `long_edge`, preserving
// aspect ratio. Images already small enough pass through unchanged. Pure
// integer arithmetic, so results are identical across platforms.
Image scale_to_long_edge(const Image& image, int long_edge);

// Tiles images row-major into a near-square grid (cols = ceil(sqrt(n))).
// Every cell is the size of the largest tile; smaller tiles sit at the
// top-left of their cell over black.
Image montage_grid(const std::vector<Image>& tiles);

}  // namespace georeason::img
