// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include <doctest.h>

#include "georeason/errors.hpp"
#include "georeason/reasoning/thumbnail.hpp"
#include "georeason/util/files.hpp"
#include "support/fixtures.hpp"

using namespace georeason;
using reasoning::evenly_spaced_indices;

TEST_CASE("evenly spaced view selection") {
    CHECK(evenly_spaced_indices(16, 8) ==
          std::vector<std::size_t>{0, 2, 4, 6, 8, 10, 12, 14});
    CHECK(evenly_spaced_indices(5, 8) == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(evenly_spaced_indices(8, 8) == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(evenly_spaced_indices(33, 8) ==
          std::vector<std::size_t>{0, 4, 8, 12, 16, 20, 24, 28});
    CHECK(evenly_spaced_indices(0, 8).empty());
    CHECK(evenly_spaced_indices(3, 1) == std::vector<std::size_t>{0});
}

TEST_CASE("single view thumbnail is that view downscaled") {
    reasoning::ThumbnailParams params;
    params.tile_edge = 8;
    img::Image view = fixtures::patterned_image(32, 16, 4);
    std::vector<img::Image> views{view};
    img::Image thumb = reasoning::compose_thumbnail(views, params);
    img::Image expected = img::scale_to_long_edge(view, 8);
    CHECK(thumb.width == expected.width);
    CHECK(thumb.height == expected.height);
    CHECK(thumb.pixels == expected.pixels);
}

TEST_CASE("make_thumbnail writes a deterministic montage") {
    fixtures::TempDir tmp;
    auto root = tmp.path() / "images";
    std::filesystem::create_directories(root);
    std::vector<std::string> panorama;
    for (int i = 0; i < 16; ++i) {
        std::string ref = "v" + std::to_string(i) + ".ppm";
        img::save_ppm(fixtures::patterned_image(20, 12, std::uint32_t(i + 1)), root / ref);
        panorama.push_back(ref);
    }
    reasoning::ThumbnailParams params;
    params.max_views = 8;
    params.tile_edge = 10;

    auto p1 = reasoning::make_thumbnail(panorama, root, params, "s0", tmp.path() / "t1");
    auto p2 = reasoning::make_thumbnail(panorama, root, params, "s0", tmp.path() / "t2");
    CHECK(p1.filename() == "s0.ppm");
    CHECK(util::read_binary_file(p1) == util::read_binary_file(p2));

    img::Image thumb = img::load_ppm(p1);
    // 8 tiles of 10x6 in a 3x3 grid.
    CHECK(thumb.width == 30);
    CHECK(thumb.height == 18);
}

TEST_CASE("make_thumbnail propagates decode failures with the image id") {
    fixtures::TempDir tmp;
    auto root = tmp.path() / "images";
    std::filesystem::create_directories(root);
    util::write_text_file(root / "broken.ppm", "not a ppm at all");
    std::vector<std::string> panorama{"broken.ppm"};
    CHECK_THROWS_AS(
        reasoning::make_thumbnail(panorama, root, {}, "s0", tmp.path() / "out"),
        ImageDecodeError);
}

TEST_CASE("make_thumbnail rejects an empty panorama") {
    fixtures::TempDir tmp;
    std::vector<std::string> panorama;
    CHECK_THROWS_AS(reasoning::make_thumbnail(panorama, tmp.path(), {}, "s0", tmp.path()),
                    Error);
}
