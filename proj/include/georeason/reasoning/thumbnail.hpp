// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "georeason/imaging/image.hpp"

namespace georeason::reasoning {

struct ThumbnailParams {
    std::size_t max_views = 8;
    int tile_edge = 336;  // long edge of each tile, pixels
};

// Indices of the views entering the montage: all of them when n fits, else
// max_views evenly spaced indices floor(i*n/max_views).
std::vector<std::size_t> evenly_spaced_indices(std::size_t n, std::size_t max_views);

// Pure montage construction over decoded views.
img::Image compose_thumbnail(std::span<const img::Image> views, const ThumbnailParams& params);

// Loads the selected panorama views, composes the montage and writes it as
// "<sample id>.ppm" under out_dir. Deterministic for identical inputs.
std::filesystem::path make_thumbnail(std::span<const std::string> panorama,
                                     const std::filesystem::path& image_root,
                                     const ThumbnailParams& params, const std::string& sample_id,
                                     const std::filesystem::path& out_dir);

}  // namespace georeason::reasoning
