// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/clues/detect.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "georeason/errors.hpp"
#include "georeason/imaging/image.hpp"
#include "georeason/util/files.hpp"

namespace georeason::clues {

namespace util = georeason::util;

namespace {

struct Candidate {
    std::size_t image_index = 0;
    std::size_t box_order = 0;  // order within the detector response
    BoundingBox box;
    std::string term;
    double confidence = 0.0;
};

// Greedy per-term NMS: highest confidence first (ties keep detector order),
// suppressing same-term boxes with iou above the threshold.
std::vector<Candidate> nms_per_image(std::vector<Candidate> cands, double iou_threshold) {
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return a.confidence > b.confidence;
    });
    std::vector<Candidate> kept;
    for (const Candidate& c : cands) {
        bool suppressed = false;
        for (const Candidate& k : kept) {
            if (k.term == c.term && iou(k.box, c.box) > iou_threshold) {
                suppressed = true;
                break;
            }
        }
        if (!suppressed) kept.push_back(c);
    }
    return kept;
}

BoundingBox pad_box(const BoundingBox& box, double pad_fraction, int width, int height) {
    int pad_x = static_cast<int>(std::lround(box.w * pad_fraction));
    int pad_y = static_cast<int>(std::lround(box.h * pad_fraction));
    BoundingBox padded{box.x - pad_x, box.y - pad_y, box.w + 2 * pad_x, box.h + 2 * pad_y};
    return clamp_box(padded, width, height);
}

}  // namespace

std::vector<VisualClue> detect_clues(const std::string& sample_id,
                                     std::span<const std::string> panorama,
                                     const std::filesystem::path& image_root,
                                     const DetectionPromptVocabulary& vocabulary,
                                     backends::DetectorBackend& detector,
                                     const DetectionParams& params,
                                     const std::filesystem::path& crop_dir) {
    std::vector<Candidate> survivors;
    std::vector<img::Image> decoded(panorama.size());

    for (std::size_t idx = 0; idx < panorama.size(); ++idx) {
        const std::string& ref = panorama[idx];
        auto bytes = util::read_binary_file(image_root / ref);
        decoded[idx] = img::decode_ppm(bytes, ref);

        auto detections = detector.detect(ref, bytes, vocabulary.terms);
        std::vector<Candidate> cands;
        for (std::size_t d = 0; d < detections.size(); ++d) {
            const backends::Detection& det = detections[d];
            if (det.confidence < params.min_confidence) continue;
            if (!vocabulary.contains(det.term)) continue;
            BoundingBox box = clamp_box({det.x, det.y, det.w, det.h}, decoded[idx].width,
                                        decoded[idx].height);
            if (!box.valid()) continue;
            cands.push_back({idx, d, box, det.term, det.confidence});
        }
        auto kept = nms_per_image(std::move(cands), params.iou_threshold);
        survivors.insert(survivors.end(), kept.begin(), kept.end());
    }

    // Union over images, truncated to the highest-confidence clues, then
    // restored to (image index, box order) for stable ids.
    if (survivors.size() > params.max_clues_per_sample) {
        std::sort(survivors.begin(), survivors.end(), [](const Candidate& a, const Candidate& b) {
            if (a.confidence != b.confidence) return a.confidence > b.confidence;
            if (a.image_index != b.image_index) return a.image_index < b.image_index;
            return a.box_order < b.box_order;
        });
        survivors.resize(params.max_clues_per_sample);
    }
    std::sort(survivors.begin(), survivors.end(), [](const Candidate& a, const Candidate& b) {
        if (a.image_index != b.image_index) return a.image_index < b.image_index;
        return a.box_order < b.box_order;
    });

    std::filesystem::create_directories(crop_dir);
    std::vector<VisualClue> clues;
    clues.reserve(survivors.size());
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        const Candidate& c = survivors[i];
        VisualClue clue;
        char seq[16];
        std::snprintf(seq, sizeof(seq), "%03zu", i);
        clue.id = sample_id + "-c" + seq;
        clue.sample_id = sample_id;
        clue.source_image = panorama[c.image_index];
        clue.box = c.box;
        clue.term = c.term;
        clue.confidence = c.confidence;

        const img::Image& src = decoded[c.image_index];
        BoundingBox padded = pad_box(c.box, params.pad_fraction, src.width, src.height);
        img::Image crop_img = img::crop(src, padded.x, padded.y, padded.w, padded.h);
        clue.crop_path = crop_dir / (clue.id + ".ppm");
        img::save_ppm(crop_img, clue.crop_path);

        clues.push_back(std::move(clue));
    }
    return clues;
}

}  // namespace georeason::clues
