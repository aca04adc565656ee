// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "georeason/backends/contracts.hpp"
#include "georeason/clues/geometry.hpp"
#include "georeason/clues/vocabulary.hpp"

namespace georeason::clues {

// A detected fine-grained element: box and term from the detector, plus the
// padded crop written for the retrieval and reasoning stages.
struct VisualClue {
    std::string id;
    std::string sample_id;
    std::string source_image;  // panorama ref the clue came from
    BoundingBox box;           // clamped to the source image
    std::string term;
    double confidence = 0.0;
    std::filesystem::path crop_path;  // exists once detect_clues returns
};

struct DetectionParams {
    double min_confidence = 0.35;
    double iou_threshold = 0.5;
    std::size_t max_clues_per_sample = 12;
    double pad_fraction = 0.1;
};

// Runs the detector over every panorama image and unions the results:
// confidence filter, then per-image per-term greedy NMS, then truncation to
// the max_clues_per_sample highest-confidence clues. Output order is
// (image index, box order); ids are assigned in that order. Crops (the box
// padded by pad_fraction per side, clamped) are written to crop_dir as
// "<clue id>.ppm".
std::vector<VisualClue> detect_clues(const std::string& sample_id,
                                     std::span<const std::string> panorama,
                                     const std::filesystem::path& image_root,
                                     const DetectionPromptVocabulary& vocabulary,
                                     backends::DetectorBackend& detector,
                                     const DetectionParams& params,
                                     const std::filesystem::path& crop_dir);

}  // namespace georeason::clues
