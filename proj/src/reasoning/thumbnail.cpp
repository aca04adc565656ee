// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/reasoning/thumbnail.hpp"

#include "georeason/errors.hpp"
#include "georeason/util/files.hpp"

namespace georeason::reasoning {

std::vector<std::size_t> evenly_spaced_indices(std::size_t n, std::size_t max_views) {
    std::vector<std::size_t> out;
    if (n == 0 || max_views == 0) return out;
    if (n <= max_views) {
        out.resize(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = i;
        return out;
    }
    out.reserve(max_views);
    for (std::size_t i = 0; i < max_views; ++i) {
        out.push_back(i * n / max_views);
    }
    return out;
}

img::Image compose_thumbnail(std::span<const img::Image> views, const ThumbnailParams& params) {
    std::vector<img::Image> tiles;
    tiles.reserve(views.size());
    for (const img::Image& view : views) {
        tiles.push_back(img::scale_to_long_edge(view, params.tile_edge));
    }
    return img::montage_grid(tiles);
}

std::filesystem::path make_thumbnail(std::span<const std::string> panorama,
                                     const std::filesystem::path& image_root,
                                     const ThumbnailParams& params, const std::string& sample_id,
                                     const std::filesystem::path& out_dir) {
    if (panorama.empty()) throw Error("cannot build a thumbnail from an empty panorama");
    std::vector<img::Image> views;
    for (std::size_t idx : evenly_spaced_indices(panorama.size(), params.max_views)) {
        views.push_back(img::load_ppm(image_root / panorama[idx]));
    }
    img::Image montage = compose_thumbnail(views, params);
    std::filesystem::create_directories(out_dir);
    auto path = out_dir / (sample_id + ".ppm");
    img::save_ppm(montage, path);
    return path;
}

}  // namespace georeason::reasoning
