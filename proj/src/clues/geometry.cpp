// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/clues/geometry.hpp"

#include <algorithm>

namespace georeason::clues {

double iou(const BoundingBox& a, const BoundingBox& b) {
    if (!a.valid() || !b.valid()) return 0.0;
    int ix0 = std::max(a.x, b.x);
    int iy0 = std::max(a.y, b.y);
    int ix1 = std::min(a.x + a.w, b.x + b.w);
    int iy1 = std::min(a.y + a.h, b.y + b.h);
    if (ix1 <= ix0 || iy1 <= iy0) return 0.0;
    long long inter = static_cast<long long>(ix1 - ix0) * (iy1 - iy0);
    long long uni = a.area() + b.area() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

BoundingBox clamp_box(const BoundingBox& box, int width, int height) {
    int x0 = std::clamp(box.x, 0, width);
    int y0 = std::clamp(box.y, 0, height);
    int x1 = std::clamp(box.x + box.w, 0, width);
    int y1 = std::clamp(box.y + box.h, 0, height);
    return {x0, y0, x1 - x0, y1 - y0};
}

}  // namespace georeason::clues
